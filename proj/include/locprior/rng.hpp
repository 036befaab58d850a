#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace locprior {

// Deterministic PRNG with named sub-streams. All randomness in the project
// flows from a single root seed through stream(), so scene generation, noise
// injection and evaluation can be re-seeded independently of each other and
// the output is bit-identical across platforms (no std::*_distribution).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    static std::uint64_t hash_str(std::string_view name) {
        std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
        for (char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    // Derive an independent stream keyed by name (and an optional index).
    Rng stream(std::string_view name, std::uint64_t index = 0) const {
        std::uint64_t s = state_;
        s = splitmix(s ^ hash_str(name));
        s = splitmix(s ^ (index * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull));
        return Rng(FromState{}, s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    std::uint32_t next_u32() { return static_cast<std::uint32_t>(next_u64() >> 32); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    // Standard normal via Box-Muller; pinned here rather than using
    // std::normal_distribution, whose algorithm is implementation-defined.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    struct FromState {};
    Rng(FromState, std::uint64_t s) : state_(s) {}

    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        return mix(x);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace locprior
