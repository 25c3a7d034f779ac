#pragma once

/**
 * @file rng.hpp
 * @brief Deterministic counter-based random streams.
 *
 * Every draw is a pure function of (stream key, position), so sampling is
 * reproducible under any threading layout and any evaluation order. Keys are
 * derived by nesting a 64-bit finalizer over (seed, labels...); positions
 * advance by a fixed odd stride inside the stream.
 */

#include <cmath>
#include <cstdint>
#include <utility>

namespace fuss {

inline constexpr std::uint64_t golden64 = 0x9E3779B97F4A7C15ull;

/// 64-bit avalanche: add-shift-multiply chain with full bit diffusion.
inline std::uint64_t mix64(std::uint64_t z) {
    z += golden64;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(mix64(mix64(seed) ^ golden64 * (a + 1)) ^ golden64 * (b + 1));
}

/// Stateless stream: draws are addressed, never consumed.
class Stream {
  public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    std::uint64_t bits(std::uint64_t pos) const { return mix64(key_ + pos * golden64); }

    /// Uniform on [0, 1), 53-bit resolution.
    double unit(std::uint64_t pos) const {
        return static_cast<double>(bits(pos) >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1], safe under log and negative powers.
    double unit_open(std::uint64_t pos) const {
        return static_cast<double>((bits(pos) >> 11) + 1) * 0x1.0p-53;
    }

    /// Two independent standard normals from positions pos and pos + 1.
    std::pair<double, double> gaussian_pair(std::uint64_t pos) const {
        double r = std::sqrt(-2.0 * std::log(unit_open(pos)));
        double theta = 2.0 * M_PI * unit(pos + 1);
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    /// Fair sign from the top bit.
    double sign(std::uint64_t pos) const { return (bits(pos) >> 63) ? -1.0 : 1.0; }

  private:
    std::uint64_t key_;
};

}  // namespace fuss
