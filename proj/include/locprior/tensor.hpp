#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "locprior/errors.hpp"

namespace locprior {

// Dense row-major f32 tensor of rank 2 (H×W) or rank 3 (C×H×W). Rank-2
// tensors behave as C=1 everywhere. This is the universal carrier for
// images-as-features, kernels and correlation stacks.
class Tensor {
public:
    Tensor() = default;

    Tensor(std::vector<std::uint32_t> dims, std::vector<float> data);

    static Tensor zeros2(std::uint32_t h, std::uint32_t w);
    static Tensor zeros3(std::uint32_t c, std::uint32_t h, std::uint32_t w);

    int rank() const { return static_cast<int>(dims_.size()); }
    const std::vector<std::uint32_t>& dims() const { return dims_; }

    std::uint32_t channels() const { return rank() == 3 ? dims_[0] : 1; }
    std::uint32_t height() const { return rank() == 3 ? dims_[1] : dims_[0]; }
    std::uint32_t width() const { return rank() == 3 ? dims_[2] : dims_[1]; }

    std::size_t size() const { return data_.size(); }

    float& at(std::uint32_t c, std::uint32_t y, std::uint32_t x) {
        return data_[(static_cast<std::size_t>(c) * height() + y) * width() + x];
    }
    float at(std::uint32_t c, std::uint32_t y, std::uint32_t x) const {
        return data_[(static_cast<std::size_t>(c) * height() + y) * width() + x];
    }

    float* row(std::uint32_t c, std::uint32_t y) { return &at(c, y, 0); }
    const float* row(std::uint32_t c, std::uint32_t y) const { return &at(c, y, 0); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }
    const std::vector<float>& values() const { return data_; }
    std::vector<float>& values() { return data_; }

    bool same_shape(const Tensor& other) const { return dims_ == other.dims_; }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.dims_ == b.dims_ && a.data_ == b.data_;
    }

private:
    std::vector<std::uint32_t> dims_;
    std::vector<float> data_;
};

enum class Padding { valid, same };

// Eq. 1 sliding dot product summed over channels; no kernel flip. `same`
// zero-pads so the output matches the query's spatial dims.
Tensor cross_correlate(const Tensor& query, const Tensor& kernel, Padding padding);

// Corner-aligned bilinear interpolation, channel independent. Resizing to
// the input dims is a bit-exact identity.
Tensor resize_bilinear(const Tensor& t, std::uint32_t new_h, std::uint32_t new_w);

// Eq. 2 shrink branch: average pooling over cells of side `rate`; output
// side is ceil(side/rate) and a ragged last cell averages over what exists.
Tensor pyramid_pool(const Tensor& kernel, int rate);

// Eq. 3 expand branch: elements placed at stride `rate`, zeros between;
// output side is side*rate - rate + 1.
Tensor dilate_kernel(const Tensor& kernel, int rate);

// Eq. 4 CAT: stacks single-channel maps into an N×H×W tensor, order kept.
Tensor stack_maps(const std::vector<Tensor>& maps);

// Channel slice as 1×H×W; exact inverse of stack_maps.
Tensor channel_slice(const Tensor& t, std::uint32_t index);

bool all_finite(const Tensor& t);

// "LPT1" binary format: magic, u32 LE rank, rank u32 LE dims, f32 LE payload.
void write_lpt1(std::ostream& out, const Tensor& t);
Tensor read_lpt1(std::istream& in);
void save_lpt1(const std::string& path, const Tensor& t);
Tensor load_lpt1(const std::string& path);

}  // namespace locprior
