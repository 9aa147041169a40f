#pragma once

// Deterministic randomness. Everything random in this project flows
// through mt19937_64 plus the mappings below. std::uniform_real_distribution
// and friends are implementation-defined, so golden files pinned by the
// test suite would not survive a standard-library change; the mappings
// here are bit-stable on any conforming platform.
//
// Stream layout conventions:
//   - derive_seed(base, stream) yields independent sub-seeds (resampling
//     attempts, per-device batch streams, replicate seeds).
//   - uniform01 takes the top 53 bits of one engine draw.
//   - bounded(n) uses a 128-bit multiply-shift (bias < n/2^64).
//   - normals come from Box-Muller pairs.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace drgossip {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream ^ 0xA0761D6478BD642Full));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform in [0,1).
inline double uniform01(Rng& r) { return static_cast<double>(r() >> 11) * 0x1.0p-53; }

// Uniform integer in [0,n).
inline std::uint64_t bounded(Rng& r, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(r()) * n) >> 64);
}

// Standard normals via Box-Muller; caches the second value of each pair.
class NormalStream {
public:
    explicit NormalStream(Rng& rng) : rng_(rng) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01(rng_);
        const double u2 = uniform01(rng_);
        const double radius = std::sqrt(-2.0 * std::log1p(-u1)); // 1-u1 in (0,1]
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    Rng& rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// In-place Fisher-Yates.
template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& r) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded(r, i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace drgossip
