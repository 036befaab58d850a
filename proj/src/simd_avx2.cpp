// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma and
// only ever entered after a runtime cpuid check (see simd.cpp), so the rest
// of the library can be built for the baseline ISA.

#include "locprior/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace locprior::simd {
namespace avx2 {

inline float hsum256(__m256 v) {
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    __m128 s = _mm_add_ps(lo, hi);
    __m128 shuf = _mm_movehdup_ps(s);
    s = _mm_add_ps(s, shuf);
    shuf = _mm_movehl_ps(shuf, s);
    s = _mm_add_ss(s, shuf);
    return _mm_cvtss_f32(s);
}

inline double hsum256d(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(s, s);
    s = _mm_add_sd(s, shuf);
    return _mm_cvtsd_f64(s);
}

void fma_row(float* acc, const float* src, float w, std::size_t n) {
    const __m256 vw = _mm256_set1_ps(w);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(acc + i);
        __m256 vs = _mm256_loadu_ps(src + i);
        va = _mm256_fmadd_ps(vs, vw, va);
        _mm256_storeu_ps(acc + i, va);
    }
    for (; i < n; ++i) {
        acc[i] += w * src[i];
    }
}

float dot(const float* a, const float* b, std::size_t n) {
    __m256 sum = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        sum = _mm256_fmadd_ps(va, vb, sum);
    }
    float result = hsum256(sum);
    for (; i < n; ++i) {
        result += a[i] * b[i];
    }
    return result;
}

void sum_sumsq(const float* x, std::size_t n, double* sum, double* sumsq) {
    __m256d s0 = _mm256_setzero_pd();
    __m256d s1 = _mm256_setzero_pd();
    __m256d q0 = _mm256_setzero_pd();
    __m256d q1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 v = _mm256_loadu_ps(x + i);
        __m256d lo = _mm256_cvtps_pd(_mm256_castps256_ps128(v));
        __m256d hi = _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1));
        s0 = _mm256_add_pd(s0, lo);
        s1 = _mm256_add_pd(s1, hi);
        q0 = _mm256_fmadd_pd(lo, lo, q0);
        q1 = _mm256_fmadd_pd(hi, hi, q1);
    }
    double s = hsum256d(_mm256_add_pd(s0, s1));
    double q = hsum256d(_mm256_add_pd(q0, q1));
    for (; i < n; ++i) {
        const double v = x[i];
        s += v;
        q += v * v;
    }
    *sum = s;
    *sumsq = q;
}

float max_value(const float* x, std::size_t n) {
    std::size_t i = 0;
    float m;
    if (n >= 8) {
        __m256 vm = _mm256_loadu_ps(x);
        for (i = 8; i + 8 <= n; i += 8) {
            vm = _mm256_max_ps(vm, _mm256_loadu_ps(x + i));
        }
        __m128 lo = _mm256_castps256_ps128(vm);
        __m128 hi = _mm256_extractf128_ps(vm, 1);
        __m128 m4 = _mm_max_ps(lo, hi);
        m4 = _mm_max_ps(m4, _mm_movehl_ps(m4, m4));
        m4 = _mm_max_ss(m4, _mm_shuffle_ps(m4, m4, 0x1));
        m = _mm_cvtss_f32(m4);
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
    const __m256 va = _mm256_set1_ps(a);
    const __m256 vb = _mm256_set1_ps(b);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 v = _mm256_loadu_ps(x + i);
        v = _mm256_fmadd_ps(v, va, vb);
        _mm256_storeu_ps(x + i, v);
    }
    for (; i < n; ++i) {
        x[i] = a * x[i] + b;
    }
}

}  // namespace avx2

const Ops& avx2_ops() {
    static const Ops ops{avx2::fma_row, avx2::dot, avx2::sum_sumsq, avx2::max_value,
                         avx2::scale_shift};
    return ops;
}

}  // namespace locprior::simd

#endif  // x86_64
