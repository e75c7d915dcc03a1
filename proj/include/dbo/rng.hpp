#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace dbo {

/// splitmix64 stream. Hand-rolled so that sampled data is bit-reproducible
/// across standard libraries; std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  /// Independent stream for sample #idx of a seeded experiment.
  static Rng forSample(std::uint64_t seed, std::uint64_t idx) {
    Rng r(seed ^ (0x9E3779B97F4A7C15ULL * (idx + 1)));
    r.nextU64();
    r.nextU64();
    return r;
  }

  std::uint64_t nextU64() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(nextU64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (hasSpare_) {
      hasSpare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform01();
    } while (u <= 0.0);
    const double v = uniform01();
    const double m = std::sqrt(-2.0 * std::log(u));
    hasSpare_ = true;
    spare_ = m * std::sin(2.0 * std::numbers::pi * v);
    return m * std::cos(2.0 * std::numbers::pi * v);
  }

  std::complex<double> gaussianComplex() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

 private:
  std::uint64_t s_;
  bool hasSpare_ = false;
  double spare_ = 0.0;
};

}  // namespace dbo
