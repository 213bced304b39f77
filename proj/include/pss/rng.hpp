#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace pss {

/// splitmix64 finalizer; full-avalanche 64-bit mix.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Minimal sequential generator for seeded initialization and shuffling.
/// Self-contained so that streams are identical across compilers.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1), 53-bit resolution.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller with a cached spare.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double two_pi = 6.283185307179586;
        double u = 1.0 - u01(); // avoid log(0)
        double r = std::sqrt(-2.0 * std::log(u));
        double theta = two_pi * u01();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Uniform integer in [0, n). Modulo bias is irrelevant at our scales.
    uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }

private:
    uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Counter-based uniform draw keyed by (seed, iteration, a, b): stateless and
/// reproducible, so selections can be replayed from (seed, iteration) alone.
inline double counter_u01(uint64_t seed, uint64_t iteration, uint64_t a, uint64_t b) {
    uint64_t h = mix64(seed);
    h = mix64(h ^ (iteration + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    h = mix64(h ^ (a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    h = mix64(h ^ (b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Fisher-Yates shuffle driven by a SplitMix64 stream.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = rng.below(static_cast<uint32_t>(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace pss
