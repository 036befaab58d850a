#pragma once

#include <cstddef>

namespace locprior::simd {

enum class Backend { scalar, avx2, neon };

// Flat arithmetic kernels behind every hot loop: correlation accumulation,
// map statistics, fused-map blending. Each backend provides the same table;
// the scalar entries are the reference semantics the vector paths must match.
struct Ops {
    // acc[i] += w * src[i]
    void (*fma_row)(float* acc, const float* src, float w, std::size_t n);
    // sum_i a[i] * b[i]
    float (*dot)(const float* a, const float* b, std::size_t n);
    // 64-bit accumulated sum and sum of squares
    void (*sum_sumsq)(const float* x, std::size_t n, double* sum, double* sumsq);
    // maximum element (n >= 1)
    float (*max_value)(const float* x, std::size_t n);
    // x[i] = a * x[i] + b
    void (*scale_shift)(float* x, float a, float b, std::size_t n);
};

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

bool backend_available(Backend b);

// Runtime-selected table. Resolved once from CPU features (honours the
// LOCPRIOR_SIMD=scalar|avx2|neon environment override on first use).
const Ops& active_ops();
Backend active_backend();

// Force a backend; returns false if unsupported on this machine.
bool set_backend(Backend b);

const char* backend_name(Backend b);

}  // namespace locprior::simd
