// NEON variants for aarch64. NEON is baseline on that architecture, so no
// separate compile flags or cpuid probing are needed.

#include "locprior/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace locprior::simd {
namespace neon {

void fma_row(float* acc, const float* src, float w, std::size_t n) {
    const float32x4_t vw = vdupq_n_f32(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t va = vld1q_f32(acc + i);
        float32x4_t vs = vld1q_f32(src + i);
        va = vfmaq_f32(va, vs, vw);
        vst1q_f32(acc + i, va);
    }
    for (; i < n; ++i) {
        acc[i] += w * src[i];
    }
}

float dot(const float* a, const float* b, std::size_t n) {
    float32x4_t sum = vdupq_n_f32(0.0f);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        sum = vfmaq_f32(sum, vld1q_f32(a + i), vld1q_f32(b + i));
    }
    float result = vaddvq_f32(sum);
    for (; i < n; ++i) {
        result += a[i] * b[i];
    }
    return result;
}

void sum_sumsq(const float* x, std::size_t n, double* sum, double* sumsq) {
    float64x2_t s = vdupq_n_f64(0.0);
    float64x2_t q = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t v = vld1q_f32(x + i);
        float64x2_t lo = vcvt_f64_f32(vget_low_f32(v));
        float64x2_t hi = vcvt_f64_f32(vget_high_f32(v));
        s = vaddq_f64(s, vaddq_f64(lo, hi));
        q = vfmaq_f64(q, lo, lo);
        q = vfmaq_f64(q, hi, hi);
    }
    double rs = vaddvq_f64(s);
    double rq = vaddvq_f64(q);
    for (; i < n; ++i) {
        const double v = x[i];
        rs += v;
        rq += v * v;
    }
    *sum = rs;
    *sumsq = rq;
}

float max_value(const float* x, std::size_t n) {
    std::size_t i = 0;
    float m;
    if (n >= 4) {
        float32x4_t vm = vld1q_f32(x);
        for (i = 4; i + 4 <= n; i += 4) {
            vm = vmaxq_f32(vm, vld1q_f32(x + i));
        }
        m = vmaxvq_f32(vm);
    } else {
        m = x[0];
        i = 1;
    }
    for (; i < n; ++i) {
        if (x[i] > m) m = x[i];
    }
    return m;
}

void scale_shift(float* x, float a, float b, std::size_t n) {
    const float32x4_t va = vdupq_n_f32(a);
    const float32x4_t vb = vdupq_n_f32(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t v = vld1q_f32(x + i);
        v = vfmaq_f32(vb, v, va);
        vst1q_f32(x + i, v);
    }
    for (; i < n; ++i) {
        x[i] = a * x[i] + b;
    }
}

}  // namespace neon

const Ops& neon_ops() {
    static const Ops ops{neon::fma_row, neon::dot, neon::sum_sumsq, neon::max_value,
                         neon::scale_shift};
    return ops;
}

}  // namespace locprior::simd

#endif  // __aarch64__
