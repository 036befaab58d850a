#include "locprior/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace locprior {

namespace {

// Skips whitespace and '#' comments between PNM header tokens.
int next_header_int(std::istream& in, const std::string& path) {
    while (in) {
        const int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value = -1;
    in >> value;
    if (!in || value < 0) throw IoError("malformed PNM header: " + path);
    return value;
}

}  // namespace

Image read_ppm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path);
    char m0 = 0, m1 = 0;
    f.get(m0);
    f.get(m1);
    if (m0 != 'P' || m1 != '6') throw IoError("not a P6 PPM: " + path);
    const int w = next_header_int(f, path);
    const int h = next_header_int(f, path);
    const int maxval = next_header_int(f, path);
    if (w < 1 || h < 1 || maxval != 255) throw IoError("unsupported PPM geometry: " + path);
    f.get();  // single whitespace after maxval
    Image img(static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(h));
    f.read(reinterpret_cast<char*>(img.pixels.data()),
           static_cast<std::streamsize>(img.pixels.size()));
    if (!f) throw IoError("truncated PPM payload: " + path);
    return img;
}

void write_ppm(const std::string& path, const Image& img) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << "P6\n" << img.width << " " << img.height << "\n255\n";
    f.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (!f) throw IoError("PPM write failed: " + path);
}

void write_pgm_heatmap(const std::string& path, const Tensor& map2d) {
    const std::uint32_t h = map2d.height();
    const std::uint32_t w = map2d.width();
    float lo = map2d.values()[0];
    float hi = lo;
    for (float v : map2d.values()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const float span = hi > lo ? hi - lo : 1.0f;

    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << "P5\n" << w << " " << h << "\n255\n";
    for (std::uint32_t y = 0; y < h; ++y) {
        for (std::uint32_t x = 0; x < w; ++x) {
            const float v = (map2d.at(0, y, x) - lo) / span;
            f.put(static_cast<char>(static_cast<int>(std::lround(v * 255.0f))));
        }
    }
    if (!f) throw IoError("PGM write failed: " + path);
}

Tensor image_to_tensor(const Image& img) {
    Tensor t = Tensor::zeros3(3, img.height, img.width);
    for (std::uint32_t y = 0; y < img.height; ++y) {
        for (std::uint32_t x = 0; x < img.width; ++x) {
            const std::uint8_t* p = img.px(x, y);
            t.at(0, y, x) = p[0] / 255.0f;
            t.at(1, y, x) = p[1] / 255.0f;
            t.at(2, y, x) = p[2] / 255.0f;
        }
    }
    return t;
}

Image tensor_to_image(const Tensor& t) {
    if (t.channels() != 3) throw DimensionError("tensor_to_image: need 3 channels");
    Image img(t.width(), t.height());
    for (std::uint32_t y = 0; y < t.height(); ++y) {
        for (std::uint32_t x = 0; x < t.width(); ++x) {
            std::uint8_t* p = img.px(x, y);
            for (int c = 0; c < 3; ++c) {
                const float v = std::clamp(t.at(static_cast<std::uint32_t>(c), y, x), 0.0f, 1.0f);
                p[c] = static_cast<std::uint8_t>(std::lround(v * 255.0f));
            }
        }
    }
    return img;
}

Image resize_image(const Image& img, std::uint32_t new_w, std::uint32_t new_h) {
    if (new_w == img.width && new_h == img.height) return img;
    return tensor_to_image(resize_bilinear(image_to_tensor(img), new_h, new_w));
}

}  // namespace locprior
