#pragma once

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dbo/exponents.hpp"
#include "dbo/lattice.hpp"
#include "dbo/weights.hpp"

namespace dbo {

using Complex = std::complex<double>;

/// Finitely supported complex sequence on Z^d. Values live on an axis-aligned
/// support box; evaluation outside the box is exactly zero. Immutable after
/// construction.
class WeightedSequence {
 public:
  explicit WeightedSequence(int dim) : d_(dim), box_(Box::empty(dim)) {}

  static WeightedSequence delta(int dim, const Point& at, Complex value = Complex(1.0, 0.0));
  static WeightedSequence deltaAtOrigin(int dim, Complex value = Complex(1.0, 0.0));
  static WeightedSequence fromEntries(int dim, std::span<const std::pair<Point, Complex>> entries);
  static WeightedSequence build(const Box& support, const std::function<Complex(const Point&)>& gen);

  int dim() const { return d_; }
  const Box& support() const { return box_; }
  bool isZero() const { return values_.empty(); }
  long long storedCount() const { return static_cast<long long>(values_.size()); }

  Complex at(const Point& k) const {
    if (!box_.contains(k)) return Complex(0.0, 0.0);
    return values_[static_cast<std::size_t>(box_.linearIndex(k))];
  }

  /// Visits stored points in canonical box order.
  void forEachStored(const std::function<void(const Point&, Complex)>& fn) const;

 private:
  int d_;
  Box box_;
  std::vector<Complex> values_;
};

/// ||f||_{l^p_w} = (sum_k w_s(k)^p |f_k|^p)^{1/p}; sup_k w_s(k) |f_k| for p = inf.
/// The sum ranges over the finite support.
double weightedNorm(const WeightedSequence& f, WeightParams w, Exponent p);

/// (bf)_k = b_k f_k on the intersection of the supports.
WeightedSequence pointwiseMultiply(const WeightedSequence& b, const WeightedSequence& f);

WeightedSequence add(const WeightedSequence& f, const WeightedSequence& g);
WeightedSequence scaled(const WeightedSequence& f, Complex c);

}  // namespace dbo
