#include "locprior/simd.hpp"

namespace locprior::simd {
namespace scalar {

void fma_row(float* acc, const float* src, float w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        acc[i] += w * src[i];
    }
}

float dot(const float* a, const float* b, std::size_t n) {
    float sum = 0.0f;
    for (std::size_t i = 0; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

void sum_sumsq(const float* x, std::size_t n, double* sum, double* sumsq) {
    double s = 0.0;
    double s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i];
        s += v;
        s2 += v * v;
    }
    *sum = s;
    *sumsq = s2;
}

float max_value(const float* x, std::size_t n) {
    float m = x[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] > m) m = x[i];
    }
    return m;
}

void scale_shift(float* x, float a, float b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = a * x[i] + b;
    }
}

}  // namespace scalar

const Ops& scalar_ops() {
    static const Ops ops{scalar::fma_row, scalar::dot, scalar::sum_sumsq, scalar::max_value,
                         scalar::scale_shift};
    return ops;
}

}  // namespace locprior::simd
