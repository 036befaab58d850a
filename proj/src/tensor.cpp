#include "locprior/tensor.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "locprior/counters.hpp"
#include "locprior/simd.hpp"

namespace locprior {

namespace {

std::size_t checked_product(const std::vector<std::uint32_t>& dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

void validate_dims(const std::vector<std::uint32_t>& dims) {
    if (dims.size() != 2 && dims.size() != 3) {
        throw DimensionError("tensor rank must be 2 or 3, got " + std::to_string(dims.size()));
    }
    for (auto d : dims) {
        if (d == 0) throw DimensionError("tensor dims must all be >= 1");
    }
}

}  // namespace

Tensor::Tensor(std::vector<std::uint32_t> dims, std::vector<float> data)
    : dims_(std::move(dims)), data_(std::move(data)) {
    validate_dims(dims_);
    if (data_.size() != checked_product(dims_)) {
        throw DimensionError("tensor data length does not match dims product");
    }
}

Tensor Tensor::zeros2(std::uint32_t h, std::uint32_t w) {
    return Tensor({h, w}, std::vector<float>(static_cast<std::size_t>(h) * w, 0.0f));
}

Tensor Tensor::zeros3(std::uint32_t c, std::uint32_t h, std::uint32_t w) {
    return Tensor({c, h, w}, std::vector<float>(static_cast<std::size_t>(c) * h * w, 0.0f));
}

Tensor cross_correlate(const Tensor& query, const Tensor& kernel, Padding padding) {
    if (query.channels() != kernel.channels()) {
        throw DimensionError("cross_correlate: channel mismatch (" +
                             std::to_string(query.channels()) + " vs " +
                             std::to_string(kernel.channels()) + ")");
    }
    const std::uint32_t c = query.channels();
    const std::uint32_t hq = query.height();
    const std::uint32_t wq = query.width();
    const std::uint32_t hk = kernel.height();
    const std::uint32_t wk = kernel.width();

    // Same padding materializes the zero border so the inner loops run the
    // full Eq. 1 footprint for every output element; the MAC count below is
    // then exact by construction.
    const Tensor* src = &query;
    Tensor padded;
    if (padding == Padding::same) {
        const std::uint32_t pad_top = (hk - 1) / 2;
        const std::uint32_t pad_left = (wk - 1) / 2;
        padded = Tensor::zeros3(c, hq + hk - 1, wq + wk - 1);
        for (std::uint32_t ch = 0; ch < c; ++ch) {
            for (std::uint32_t y = 0; y < hq; ++y) {
                std::memcpy(padded.row(ch, y + pad_top) + pad_left, query.row(ch, y),
                            wq * sizeof(float));
            }
        }
        src = &padded;
    } else {
        if (hk > hq || wk > wq) {
            throw DimensionError("cross_correlate: kernel larger than query in valid mode");
        }
    }

    const std::uint32_t ho = src->height() - hk + 1;
    const std::uint32_t wo = src->width() - wk + 1;
    Tensor out = Tensor::zeros3(1, ho, wo);

    const auto& ops = simd::active_ops();
    for (std::uint32_t y = 0; y < ho; ++y) {
        float* out_row = out.row(0, y);
        for (std::uint32_t ch = 0; ch < c; ++ch) {
            for (std::uint32_t ky = 0; ky < hk; ++ky) {
                const float* q_row = src->row(ch, y + ky);
                const float* k_row = kernel.row(ch, ky);
                for (std::uint32_t kx = 0; kx < wk; ++kx) {
                    ops.fma_row(out_row, q_row + kx, k_row[kx], wo);
                }
            }
        }
    }
    counters::add_correlation_macs(static_cast<std::uint64_t>(ho) * wo * c * hk * wk);
    return out;
}

Tensor resize_bilinear(const Tensor& t, std::uint32_t new_h, std::uint32_t new_w) {
    if (new_h < 1 || new_w < 1) {
        throw DimensionError("resize_bilinear: target dims must be >= 1");
    }
    const std::uint32_t h = t.height();
    const std::uint32_t w = t.width();
    if (new_h == h && new_w == w) return t;

    const std::uint32_t c = t.channels();
    Tensor out = t.rank() == 3 ? Tensor::zeros3(c, new_h, new_w) : Tensor::zeros2(new_h, new_w);

    // Corner-aligned: first/last output samples hit first/last input pixels.
    const double sy = new_h > 1 ? static_cast<double>(h - 1) / (new_h - 1) : 0.0;
    const double sx = new_w > 1 ? static_cast<double>(w - 1) / (new_w - 1) : 0.0;

    for (std::uint32_t ch = 0; ch < c; ++ch) {
        const float* src = t.row(ch, 0);
        float* dst = out.row(ch, 0);
        for (std::uint32_t y = 0; y < new_h; ++y) {
            const double fy = y * sy;
            const std::uint32_t y0 = static_cast<std::uint32_t>(fy);
            const std::uint32_t y1 = y0 + 1 < h ? y0 + 1 : h - 1;
            const double wy = fy - y0;
            for (std::uint32_t x = 0; x < new_w; ++x) {
                const double fx = x * sx;
                const std::uint32_t x0 = static_cast<std::uint32_t>(fx);
                const std::uint32_t x1 = x0 + 1 < w ? x0 + 1 : w - 1;
                const double wx = fx - x0;
                const double v00 = src[static_cast<std::size_t>(y0) * w + x0];
                const double v01 = src[static_cast<std::size_t>(y0) * w + x1];
                const double v10 = src[static_cast<std::size_t>(y1) * w + x0];
                const double v11 = src[static_cast<std::size_t>(y1) * w + x1];
                const double v = (1.0 - wy) * ((1.0 - wx) * v00 + wx * v01) +
                                 wy * ((1.0 - wx) * v10 + wx * v11);
                dst[static_cast<std::size_t>(y) * new_w + x] = static_cast<float>(v);
            }
        }
    }
    return out;
}

Tensor pyramid_pool(const Tensor& kernel, int rate) {
    if (rate < 1) throw ParameterError("pyramid_pool: rate must be >= 1");
    if (rate == 1) return kernel;
    const std::uint32_t t = static_cast<std::uint32_t>(rate);
    const std::uint32_t c = kernel.channels();
    const std::uint32_t h = kernel.height();
    const std::uint32_t w = kernel.width();
    const std::uint32_t oh = (h + t - 1) / t;
    const std::uint32_t ow = (w + t - 1) / t;

    Tensor out = kernel.rank() == 3 ? Tensor::zeros3(c, oh, ow) : Tensor::zeros2(oh, ow);
    for (std::uint32_t ch = 0; ch < c; ++ch) {
        for (std::uint32_t oy = 0; oy < oh; ++oy) {
            const std::uint32_t y0 = oy * t;
            const std::uint32_t y1 = y0 + t < h ? y0 + t : h;
            for (std::uint32_t ox = 0; ox < ow; ++ox) {
                const std::uint32_t x0 = ox * t;
                const std::uint32_t x1 = x0 + t < w ? x0 + t : w;
                double acc = 0.0;
                for (std::uint32_t y = y0; y < y1; ++y) {
                    for (std::uint32_t x = x0; x < x1; ++x) {
                        acc += kernel.at(ch, y, x);
                    }
                }
                const double cell = static_cast<double>(y1 - y0) * (x1 - x0);
                out.at(ch, oy, ox) = static_cast<float>(acc / cell);
            }
        }
    }
    return out;
}

Tensor dilate_kernel(const Tensor& kernel, int rate) {
    if (rate < 1) throw ParameterError("dilate_kernel: rate must be >= 1");
    if (rate == 1) return kernel;
    const std::uint32_t t = static_cast<std::uint32_t>(rate);
    const std::uint32_t c = kernel.channels();
    const std::uint32_t h = kernel.height();
    const std::uint32_t w = kernel.width();
    const std::uint32_t oh = h * t - t + 1;
    const std::uint32_t ow = w * t - t + 1;

    Tensor out = kernel.rank() == 3 ? Tensor::zeros3(c, oh, ow) : Tensor::zeros2(oh, ow);
    for (std::uint32_t ch = 0; ch < c; ++ch) {
        for (std::uint32_t y = 0; y < h; ++y) {
            for (std::uint32_t x = 0; x < w; ++x) {
                out.at(ch, y * t, x * t) = kernel.at(ch, y, x);
            }
        }
    }
    return out;
}

Tensor stack_maps(const std::vector<Tensor>& maps) {
    if (maps.empty()) throw DimensionError("stack_maps: empty map list");
    const std::uint32_t h = maps[0].height();
    const std::uint32_t w = maps[0].width();
    for (const auto& m : maps) {
        if (m.channels() != 1) throw DimensionError("stack_maps: maps must be single-channel");
        if (m.height() != h || m.width() != w) {
            throw DimensionError("stack_maps: map shape mismatch");
        }
    }
    Tensor out = Tensor::zeros3(static_cast<std::uint32_t>(maps.size()), h, w);
    for (std::size_t i = 0; i < maps.size(); ++i) {
        std::memcpy(out.row(static_cast<std::uint32_t>(i), 0), maps[i].data(),
                    static_cast<std::size_t>(h) * w * sizeof(float));
    }
    return out;
}

Tensor channel_slice(const Tensor& t, std::uint32_t index) {
    if (index >= t.channels()) throw RangeError("channel_slice: index out of range");
    const std::uint32_t h = t.height();
    const std::uint32_t w = t.width();
    Tensor out = Tensor::zeros3(1, h, w);
    std::memcpy(out.row(0, 0), t.row(index, 0), static_cast<std::size_t>(h) * w * sizeof(float));
    return out;
}

bool all_finite(const Tensor& t) {
    for (float v : t.values()) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

namespace {

void put_u32le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw IoError("LPT1: truncated header");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void write_lpt1(std::ostream& out, const Tensor& t) {
    out.write("LPT1", 4);
    put_u32le(out, static_cast<std::uint32_t>(t.rank()));
    for (auto d : t.dims()) put_u32le(out, d);
    for (float v : t.values()) {
        std::uint32_t bits;
        std::memcpy(&bits, &v, 4);
        put_u32le(out, bits);
    }
    if (!out) throw IoError("LPT1: write failed");
}

Tensor read_lpt1(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "LPT1", 4) != 0) throw IoError("LPT1: bad magic");
    const std::uint32_t rank = get_u32le(in);
    if (rank != 2 && rank != 3) throw IoError("LPT1: rank must be 2 or 3");
    std::vector<std::uint32_t> dims(rank);
    std::size_t n = 1;
    for (auto& d : dims) {
        d = get_u32le(in);
        if (d == 0) throw IoError("LPT1: zero dimension");
        n *= d;
    }
    std::vector<float> data(n);
    for (auto& v : data) {
        const std::uint32_t bits = get_u32le(in);
        std::memcpy(&v, &bits, 4);
    }
    return Tensor(std::move(dims), std::move(data));
}

void save_lpt1(const std::string& path, const Tensor& t) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    write_lpt1(f, t);
}

Tensor load_lpt1(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path);
    return read_lpt1(f);
}

}  // namespace locprior
