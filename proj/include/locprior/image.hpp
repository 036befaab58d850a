#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locprior/errors.hpp"
#include "locprior/tensor.hpp"

namespace locprior {

// 8-bit RGB image, row-major.
struct Image {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> pixels;  // width*height*3

    Image() = default;
    Image(std::uint32_t w, std::uint32_t h)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

    std::uint8_t* px(std::uint32_t x, std::uint32_t y) {
        return &pixels[(static_cast<std::size_t>(y) * width + x) * 3];
    }
    const std::uint8_t* px(std::uint32_t x, std::uint32_t y) const {
        return &pixels[(static_cast<std::size_t>(y) * width + x) * 3];
    }
};

Image read_ppm(const std::string& path);
void write_ppm(const std::string& path, const Image& img);

// Grayscale heatmap dump (P5), values min-max scaled to 0..255.
void write_pgm_heatmap(const std::string& path, const Tensor& map2d);

// 3×H×W float tensor in [0,1] <-> image, used by the query-resizing baseline.
Tensor image_to_tensor(const Image& img);
Image tensor_to_image(const Tensor& t);
Image resize_image(const Image& img, std::uint32_t new_w, std::uint32_t new_h);

}  // namespace locprior
