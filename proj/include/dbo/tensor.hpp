#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dbo/lattice.hpp"
#include "dbo/sequence.hpp"
#include "dbo/symbols.hpp"

namespace dbo {

/// Conservative description of where a tensor may be nonzero, used to prune
/// scans and applications. "exact" means evaluation is exactly zero outside
/// the described region.
struct Support {
  enum class Kind {
    Dense,     // no structural constraint beyond an optional cube
    DiagBand,  // |j - k|_inf <= w2 and |j - l|_inf <= w3
    SumBand,   // |x_t - x_u - x_v|_inf <= sumWidth for slot t (1-based)
  };

  Kind kind = Kind::Dense;
  int w2 = 0;
  int w3 = 0;
  int sumSlot = 1;
  int sumWidth = 0;
  std::optional<int> cubeRadius;  // all three indices within this sup-norm cube
  bool exact = false;
};

/// Fourier coefficients of a smooth torus function, with a rapid-decay tag.
/// The tag is checkable: |vhat(n)| <= decayC <n>^{-decayK} on the stored
/// support.
struct TorusCoefficient {
  WeightedSequence coeffs;
  double decayK = 0.0;
  double decayC = 1.0;

  /// True iff the declared decay bound holds at every stored point.
  bool decayTagHolds() const;
};

/// Infinite matrix sigma : Z^d x Z^d -> C with order/decay metadata. Banded
/// and cube bounds, when present, are promises the evaluator honors.
class Matrix {
 public:
  static Matrix fromEvaluator(int d, std::function<Complex(const Point&, const Point&)> eval, double order = 0.0,
                              double decayM = 0.0, std::optional<int> band = std::nullopt,
                              std::optional<int> cubeRadius = std::nullopt);
  static Matrix identity(int d);
  static Matrix fromEntries(int d, std::span<const std::pair<std::pair<Point, Point>, Complex>> entries,
                            double order = 0.0, double decayM = 0.0);

  Complex operator()(const Point& j, const Point& k) const { return eval_(j, k); }
  int dim() const { return d_; }
  double order() const { return order_; }
  double decayM() const { return decayM_; }
  std::optional<int> band() const { return band_; }
  std::optional<int> cubeRadius() const { return cubeRadius_; }

 private:
  Matrix() = default;
  int d_ = 1;
  std::function<Complex(const Point&, const Point&)> eval_;
  double order_ = 0.0;
  double decayM_ = 0.0;
  std::optional<int> band_;
  std::optional<int> cubeRadius_;
};

class TensorImpl;

/// Evaluable infinite tensor Theta : Z^d x Z^d x Z^d -> C. Families are lazy
/// evaluators with support metadata; shift / finite-difference / transpose
/// compositions share immutable parents.
class Tensor {
 public:
  Complex operator()(const Point& j, const Point& k, const Point& l) const;
  int dim() const;
  Support support() const;
  std::string family() const;
  const TensorImpl& impl() const { return *impl_; }

  /// Cancellation envelope: for difference compositions, the sum of the term
  /// magnitudes |c_i| |Theta(shifted_i)| that the signed evaluation adds up.
  /// eps * magnitudeAt bounds the rounding error of operator(), which lets
  /// scans tell numerically-zero values from genuinely small ones.
  double magnitudeAt(const Point& j, const Point& k, const Point& l) const;

  // -- families -------------------------------------------------------------

  /// Materialized values on an origin-centered cube; zero outside.
  static Tensor dense(int d, int radius,
                      const std::function<Complex(const Point&, const Point&, const Point&)>& gen);

  /// theta_j 1[j = k = l] 1[|j| + |k| + |l| <= M] (Euclidean norms).
  static Tensor diagonalCutoff(const WeightedSequence& theta, int cutoffM);

  /// Phi(k, l) 1[j = k + l].
  static Tensor convolutionPhiKL(SymbolPtr phi);

  /// Phi(j - k, j - l) 1[j = k + l].
  static Tensor convolutionPhiDiff(SymbolPtr phi);

  /// (2 pi i k)^a (2 pi i l)^b 1[j = k + l] with a, b >= 0.
  static Tensor convolutionMonomial(const MultiIndex& a, const MultiIndex& b);

  /// vhat(j - k - l).
  static Tensor multiplication(const WeightedSequence& vhat);
  /// Same, validating the declared decay tag first.
  static Tensor multiplication(const TorusCoefficient& v);

  /// vhat(j - k - l) Phi(k, l).
  static Tensor variableCoefficient(const WeightedSequence& vhat, SymbolPtr phi);

  /// sigma1(j, k) sigma2(j, l). Carries the claim that the associated
  /// omega-N norm is finite with N = decayM / 2.
  static Tensor separable(const Matrix& sigma1, const Matrix& sigma2);

  /// sum_i c_i Theta_i. Only what the harness needs (e.g. variable-coefficient
  /// operators assembled from several vhat/Phi terms); no general algebra.
  static Tensor linearCombination(std::span<const std::pair<Complex, Tensor>> terms);

  // -- calculus ---------------------------------------------------------------

  /// Joint shift: slot 2 maps (j, k) -> (j +- e_axis, k +- e_axis),
  /// slot 3 maps (j, l) likewise.
  Tensor shifted(int slot, int axis, int sign) const;

  /// Difference tensor Delta_2^alpha Delta_3^beta Theta. Negative components
  /// use the backward shift; zero components are the identity.
  Tensor difference(const MultiIndex& alpha, const MultiIndex& beta) const;

  /// which = 1: Theta(k, j, l); which = 2: Theta(l, k, j).
  Tensor transposed(int which) const;

  // accessors used by operators that dispatch per family
  const WeightedSequence* vhat() const;
  SymbolPtr phi() const;
  const MultiIndex* monomialA() const;
  const MultiIndex* monomialB() const;
  /// For separable tensors the finiteness claim N = decayM / 2.
  std::optional<double> claimedDecayN() const;

  explicit Tensor(std::shared_ptr<const TensorImpl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const TensorImpl> impl_;
};

// Operation-style aliases.
inline Complex evaluate(const Tensor& t, const Point& j, const Point& k, const Point& l) { return t(j, k, l); }
inline Tensor shiftTensor(const Tensor& t, int slot, int axis, int sign) { return t.shifted(slot, axis, sign); }
inline Tensor finiteDifference(const Tensor& t, const MultiIndex& alpha, const MultiIndex& beta) {
  return t.difference(alpha, beta);
}
inline Tensor transpose(const Tensor& t, int which) { return t.transposed(which); }
inline Tensor separableTensor(const Matrix& s1, const Matrix& s2) { return Tensor::separable(s1, s2); }

/// Enumerates every triple in the sup-norm cube of the given radius where the
/// tensor may be nonzero (pruned by support). Canonical deterministic order;
/// primaryCount/visitPrimary expose the outer loop for blocked parallelism.
class TripleEnumerator {
 public:
  TripleEnumerator(const Tensor& t, int radius);
  std::int64_t primaryCount() const { return primaryCount_; }
  /// Visits all candidate triples for primary index p (0-based).
  void visitPrimary(std::int64_t p, const std::function<void(const Point&, const Point&, const Point&)>& fn) const;
  void visitAll(const std::function<void(const Point&, const Point&, const Point&)>& fn) const;
  int effectiveRadius() const { return effR_; }

 private:
  Point primaryPoint(std::int64_t p) const;
  const Tensor& t_;
  Support s_;
  int d_;
  int scanR_;   // requested cube radius
  int effR_;    // after intersecting a cube cutoff
  std::int64_t primaryCount_;
};

}  // namespace dbo
