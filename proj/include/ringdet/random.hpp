#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ringdet/complex_matrix.hpp"

namespace ringdet {

// Seedable deterministic generator. One seed reproduces a run bit-exactly,
// so the Gaussian path is pinned here (Box-Muller over explicit 53-bit
// uniforms) instead of relying on std::normal_distribution internals.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Derived stream for window/trial `index`: seed + index.
    RandomSource derive(std::uint64_t index) const { return RandomSource(seed_ + index); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] keeps the log finite.
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Standard complex Gaussian: independent N(0, 1/2) real and imaginary
    // parts, unit total variance.
    cplx complex_normal() {
        const double re = normal();
        const double im = normal();
        return cplx(re * 0.70710678118654752440, im * 0.70710678118654752440);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace ringdet
