#pragma once

#include <vector>

#include "dbo/report.hpp"
#include "dbo/sequence.hpp"
#include "dbo/tensor.hpp"

namespace dbo {

/// Uniform grid x_m = m / n, m in {0..n-1}^d on the torus. Products of two
/// band-limit-K functions need n >= 4K + 1 to avoid aliasing.
struct TorusGrid {
  int d = 1;
  int n = 1;

  /// Smallest power of two satisfying n >= 2 * bandSum + 1.
  static TorusGrid forBandSum(int d, int bandSum);
  long long nodeCount() const;
};

/// Complex samples at the grid nodes. Fourier convention e^{+2 pi i k.x} for
/// synthesis, e^{-2 pi i k.x} (with the 1/n^d quadrature weight) for analysis.
class TorusFunction {
 public:
  TorusFunction(TorusGrid grid, std::vector<Complex> samples);

  const TorusGrid& grid() const { return grid_; }
  Complex sample(const Point& node) const;  // node in {0..n-1}^d
  const std::vector<Complex>& samples() const { return samples_; }

  static TorusFunction pointwiseProduct(const TorusFunction& a, const TorusFunction& b);

 private:
  TorusGrid grid_;
  std::vector<Complex> samples_;
};

/// Fhat restricted to |k|_inf <= K. Requires n >= 2K + 1.
WeightedSequence toFourier(const TorusFunction& f, int bandK);

/// Synthesis of finitely many coefficients on the grid. Requires the
/// coefficient support to sit inside the Nyquist band.
TorusFunction fromFourier(const WeightedSequence& coeffs, const TorusGrid& grid);

/// (d^a F / dx^a)(x) (d^b G / dx^b)(x) computed spectrally: multiply Fhat(k)
/// by (2 pi i k)^a, synthesize, multiply on the grid. Requires n >= 2(KF+KG)+1.
TorusFunction physicalDerivativeProduct(const TorusFunction& f, const TorusFunction& g, const MultiIndex& a,
                                        const MultiIndex& b, int bandF, int bandG);

/// Exact-identity check between Fourier-side application of the tensor and
/// the physical-side operator (derivative products, multiplication by V, or
/// variable coefficients with monomial symbol). For band-limited data on an
/// adequate grid this is equality up to rounding; the check threshold is
/// 1e-10 * (1 + output magnitude).
Report bridgeCheck(const Tensor& t, const TorusFunction& f, const TorusFunction& g, int bandF, int bandG);

/// L^2 norm under the grid quadrature (matches the l^2 coefficient norm for
/// band-limited functions).
double gridL2Norm(const TorusFunction& f);

/// Sobolev-type norm computed on the grid side with spectral weights <k>^s
/// over the full symmetric spectrum.
double gridSobolevNorm(const TorusFunction& f, double s);

}  // namespace dbo
