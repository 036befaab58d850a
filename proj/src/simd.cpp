#include "locprior/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace locprior::simd {

namespace {

bool cpu_has_avx2_fma() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_backend() {
    if (const char* env = std::getenv("LOCPRIOR_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::avx2)) return Backend::avx2;
        if (std::strcmp(env, "neon") == 0 && backend_available(Backend::neon)) return Backend::neon;
    }
#if defined(__aarch64__)
    return Backend::neon;
#else
    return cpu_has_avx2_fma() ? Backend::avx2 : Backend::scalar;
#endif
}

Backend g_backend = detect_backend();

const Ops& ops_for(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2:
            return avx2_ops();
#endif
#if defined(__aarch64__)
        case Backend::neon:
            return neon_ops();
#endif
        default:
            return scalar_ops();
    }
}

}  // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
            return cpu_has_avx2_fma();
        case Backend::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Ops& active_ops() { return ops_for(g_backend); }

Backend active_backend() { return g_backend; }

bool set_backend(Backend b) {
    if (!backend_available(b)) return false;
    g_backend = b;
    return true;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "unknown";
}

}  // namespace locprior::simd
