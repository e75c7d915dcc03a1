#pragma once

#include <string>

namespace dbo {

/// Lebesgue exponent in (0, infinity]. Infinity is a distinguished value,
/// never a large float. Admissible operator exponents live in [1, infinity];
/// Hoelder triples may carry r < 1, which consumers must check.
class Exponent {
 public:
  static Exponent finite(double v);
  static Exponent inf();
  static Exponent parse(const std::string& s);

  bool isInf() const { return inf_; }
  double value() const;
  /// 1/p, with 1/infinity := 0.
  double recip() const { return inf_ ? 0.0 : 1.0 / v_; }
  bool inAdmissibleRange() const { return inf_ || v_ >= 1.0; }

  /// Hoelder conjugate: 1/p + 1/p' = 1. Requires p in [1, infinity].
  Exponent dual() const;

  bool operator==(const Exponent& o) const;
  std::string str() const;

 private:
  Exponent(double v, bool isinf) : v_(v), inf_(isinf) {}
  double v_ = 2.0;
  bool inf_ = false;
};

/// Exponents (p, q, r) with 1/p + 1/q = 1/r, plus the duals of p and q.
struct HolderTriple {
  Exponent p, q, r, pDual, qDual;
};

/// Builds the triple from p and q; rejects p or q outside [1, infinity].
/// The computed r may be < 1 (e.g. p = q = 1); operations that need r >= 1
/// check it themselves.
HolderTriple holderTriple(Exponent p, Exponent q);

}  // namespace dbo
