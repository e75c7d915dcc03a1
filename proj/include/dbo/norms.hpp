#pragma once

#include <functional>

#include "dbo/exponents.hpp"
#include "dbo/lattice.hpp"
#include "dbo/report.hpp"
#include "dbo/tensor.hpp"

namespace dbo {

/// Parameter bundle for the tensor norms and seminorms.
struct NormParams {
  double omega = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  int N = 1;
  double s1 = 0.0;
  double s2 = 0.0;
  MultiIndex alpha{1};
  MultiIndex beta{1};
};

/// Supremum of a scanned quotient over the cube max(|j|oo,|k|oo,|l|oo) <= R.
/// boundaryRatio is the same supremum restricted to the boundary shell of the
/// requested cube; small values indicate the truncation captured the decay.
struct ScanResult {
  double value = 0.0;
  Point argJ, argK, argL;
  int radius = 0;
  double boundaryRatio = 0.0;

  ojson toJson() const;
};

/// ||Theta||_{omega,N} = sup |Theta| <|j-k|+|j-l|>^{2N} / (<|j|+|k|>^omega <|j|+|l|>^omega).
ScanResult normOmegaN(const Tensor& t, double omega, int N, int radius);

/// ||Theta||_{0,N}: the omega = 0 case (denominators identically one).
ScanResult normZeroN(const Tensor& t, int N, int radius);

/// Two-order variant with denominators <|j|+|k|>^{omega1} <|j|+|l|>^{omega2}.
ScanResult normTwoOrder(const Tensor& t, double omega1, double omega2, int N, int radius);

/// ||Theta||_{0,0,omega,N}: denominator <|j|+|k|+|l|>^omega.
ScanResult seminorm00(const Tensor& t, double omega, int N, int radius);

/// ||Theta||_{alpha,beta,omega,N} = sup |Delta_2^alpha Delta_3^beta Theta|
///   <|j-k|+|j-l|>^{2N} / <|j|+|k|+|l|>^{omega-|alpha|-|beta|}.
ScanResult btSeminorm(const Tensor& t, const MultiIndex& alpha, const MultiIndex& beta, double omega, int N,
                      int radius);

/// Seminorm scan plus its cancellation floor: noise is the supremum of
/// eps * magnitudeAt * weight over the same scan, an upper bound for the
/// rounding error of the signed difference evaluation. Values at or below a
/// small multiple of the floor are numerically zero.
struct SeminormScan {
  ScanResult scan;
  double noise = 0.0;
};
SeminormScan btSeminormWithNoise(const Tensor& t, const MultiIndex& alpha, const MultiIndex& beta, double omega,
                                 int N, int radius);

/// Iterated mixed norm l^r_j l^{p'}_k l^{q'}_l over the radius-R cube,
/// innermost reduction over l.
double mixedLebesgueNorm(const Tensor& t, const HolderTriple& triple, int radius);

/// Minimum of the mixed norm over all 3! nesting orders of (j, r), (k, p'),
/// (l, q').
double mixedLebesgueNormMin(const Tensor& t, const HolderTriple& triple, int radius);

/// N_0(d, omega, s1, s2) = d + max(omega, 0) + (|s1 + omega| + |s2 + omega|) / 2.
double n0Threshold(int d, double omega, double s1, double s2);

struct MembershipOptions {
  int alphaMax = 2;
  int betaMax = 2;
  double stabilityTol = 0.10;     // relative change allowed between R and 2R
  double divergenceFactor = 2.0;  // growth flagging a violation
};

/// Scans every seminorm with |alpha| <= alphaMax, |beta| <= betaMax (negative
/// components included) at radii R and 2R. Verdicts, not proofs:
/// "consistent-with-membership" when every seminorm is radius-stable,
/// "violation" with a witness when one grows by the divergence factor with its
/// argmax on the boundary, "inconclusive" otherwise.
Report btMembershipScan(const Tensor& t, double omega, int N, const MembershipOptions& opts, int radius);

/// Multi-indices in Z^d with |alpha| <= maxOrder, canonical order.
std::vector<MultiIndex> multiIndicesUpTo(int d, int maxOrder);

/// Internal scan driver, exposed for reuse: supremum of
/// quotient(j, k, l, |Theta(j,k,l)|) over the support-pruned cube. Exact-zero
/// evaluations are skipped unless skipZeros is false (noise scans visit them).
ScanResult scanSupremum(const Tensor& t, int radius,
                        const std::function<double(const Point&, const Point&, const Point&, double)>& quotient,
                        bool skipZeros = true);

}  // namespace dbo
