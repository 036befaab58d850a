#pragma once

#include <stdexcept>
#include <string>

namespace locprior {

// Validation failures (bad tensors, rotations, configs) map to CLI exit code 3,
// I/O failures to exit code 2, usage errors to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public ValidationError {
public:
    explicit DimensionError(const std::string& msg) : ValidationError(msg) {}
};

class ParameterError : public ValidationError {
public:
    explicit ParameterError(const std::string& msg) : ValidationError(msg) {}
};

class RangeError : public ValidationError {
public:
    explicit RangeError(const std::string& msg) : ValidationError(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace locprior
