#pragma once

#include <cmath>
#include <stdexcept>

#include "dbo/lattice.hpp"

namespace dbo {

/// <x> = (1 + x^2)^{1/2} for x >= 0.
inline double bracket(double x) {
  if (x < 0.0) throw std::invalid_argument("bracket argument must be nonnegative");
  return std::sqrt(1.0 + x * x);
}

/// <x>^e computed in one pow call so every norm uses the identical code path.
inline double bracketPow(double x, double e) {
  if (e == 0.0) return 1.0;
  return std::pow(1.0 + x * x, 0.5 * e);
}

/// <k> = (1 + |k|^2)^{1/2} with Euclidean |k|.
inline double bracketPoint(const Point& k) {
  return std::sqrt(1.0 + static_cast<double>(k.normSqr()));
}

/// Power weight parameters; w_s(k) = <k>^s.
struct WeightParams {
  double s = 0.0;
};

inline double powerWeight(const Point& k, WeightParams w) {
  if (w.s == 0.0) return 1.0;
  return std::pow(1.0 + static_cast<double>(k.normSqr()), 0.5 * w.s);
}

}  // namespace dbo
