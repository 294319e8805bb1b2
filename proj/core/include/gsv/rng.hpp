#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gsv {

/// Seeded random stream for validation sweeps. The bit-to-double mapping is
/// fixed here (53-bit mantissa draw from mt19937_64) so reports are
/// reproducible for a given seed independent of the standard library's
/// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double log_uniform(double a, double b) {
        return a * std::exp(uniform01() * std::log(b / a));
    }

    std::uint64_t index(std::uint64_t n) { return gen_() % n; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace gsv
