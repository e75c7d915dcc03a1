#pragma once

#include <cstdint>
#include <vector>

#include "dbo/exponents.hpp"
#include "dbo/norms.hpp"
#include "dbo/sequence.hpp"
#include "dbo/tensor.hpp"

namespace dbo {

/// (T_Theta(f, g))_j = sum_{k,l} Theta(j,k,l) f_k g_l, summed exactly over the
/// finite supports, stored for |j|_inf <= outRadius. Parallel over j with
/// fixed per-j summation order, so outputs are bit-reproducible.
WeightedSequence apply(const Tensor& t, const WeightedSequence& f, const WeightedSequence& g, int outRadius);

/// Same, with the output kept on an arbitrary box.
WeightedSequence applyOnBox(const Tensor& t, const WeightedSequence& f, const WeightedSequence& g, const Box& outBox);

/// (L_sigma(f))_j = sum_k sigma(j, k) f_k.
WeightedSequence applyLinear(const Matrix& sigma, const WeightedSequence& f, int outRadius);

/// Commutator entries computed from the expanded form
///   slot 1:  sum Theta(j,k,l) (b_k - b_j) f_k g_l,
///   slot 2:  sum Theta(j,k,l) (b_l - b_j) f_k g_l,
/// not as a difference of two applications, so the trivial cancellations
/// (constant b, diagonal Theta) are exact zeros.
WeightedSequence commutator(const Tensor& t, const WeightedSequence& b, int slot, const WeightedSequence& f,
                            const WeightedSequence& g, int outRadius);

/// <T_Theta(f, g), h> = sum_{j,k,l} Theta(j,k,l) f_k g_l h_j (no conjugation).
Complex dualityPairing(const Tensor& t, const WeightedSequence& f, const WeightedSequence& g,
                       const WeightedSequence& h);

/// Certified constant C with, on the radius-R truncation (inputs supported in
/// the cube, outputs measured on it),
///   ||T_Theta(f,g)||_{l^r_{s1+s2}} <= C ||f||_{l^p_{s1+omega}} ||g||_{l^q_{s2+omega}}.
/// Every factor of the weight-comparison chain is brute-forced on the
/// truncation and recorded, so the certificate is auditable.
struct BoundCertificate {
  bool refused = false;
  std::string reason;

  double upper = 0.0;
  double lowerEmpirical = 0.0;

  // factors
  double kw = 0.0;         // kw1 * kw2, the pointwise weight-comparison maxima
  double kw1 = 0.0;
  double kw2 = 0.0;
  double thetaNorm = 0.0;  // ||Theta||_{omega,N} scanned on the truncation
  double l1sum1 = 0.0;     // || <.>^{omega_+ + |s1+omega| - N1} ||_{l^1}
  double l1sum2 = 0.0;
  double n1 = 0.0;         // split 2N = N1 + N2
  double n2 = 0.0;
  double n0 = 0.0;

  HolderTriple triple = holderTriple(Exponent::finite(2.0), Exponent::finite(2.0));
  double s1 = 0.0, s2 = 0.0, omega = 0.0;
  int N = 0;
  int radius = 0;

  ojson toJson() const;
};

/// Implements the almost-diagonal boundedness chain: pointwise weight
/// comparison (Peetre-type bounds with brute-forced constants), the split
/// 2N = N1 + N2 with N_i > d + omega_+ + |s_i + omega| (equal-slack default),
/// then Hoelder and Young on the truncated convolutions. Refused when
/// N <= N0(d, omega, s1, s2).
BoundCertificate schurUpperBound(const Tensor& t, const HolderTriple& triple, double s1, double s2, double omega,
                                 int N, int radius);

struct EmpiricalScan {
  double best = 0.0;
  std::vector<double> sampleValues;  // one ratio per sampled unit pair
  double ascended = 0.0;             // best after alternating ascent
};

/// Lower-bound probe: max of ||T(f,g)||_{l^r_{s1+s2}} over sampled unit pairs
/// (complex Gaussian plus deterministic basis extremes, normalized in
/// l^p_{s1+omega} x l^q_{s2+omega}), then alternating ascent from the best
/// pair (exact column choice for p = 1, coordinate ascent otherwise).
/// Deterministic in (seed, sample index).
EmpiricalScan empiricalOperatorScan(const Tensor& t, const HolderTriple& triple, double s1, double s2, double omega,
                                    int radius, int samples, std::uint64_t seed);

double empiricalOperatorNorm(const Tensor& t, const HolderTriple& triple, double s1, double s2, double omega,
                             int radius, int samples, std::uint64_t seed);

/// ||Theta||_{l^1_j l^2_k l^2_l} on the truncation; dominates
/// ||T(f,g)||_{l^1} / (||f||_2 ||g||_2) by Cauchy-Schwarz.
double cauchySchwarzBound(const Tensor& t, int radius);

}  // namespace dbo
