#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dbo/operator_engine.hpp"
#include "dbo/report.hpp"
#include "dbo/symbols.hpp"

namespace dbo {

struct ExperimentParams {
  HolderTriple triple = holderTriple(Exponent::finite(2.0), Exponent::finite(2.0));
  double s1 = 0.0;
  double s2 = 0.0;
  double omega = 0.0;
  int N = 2;
  int radius = 8;
  int samples = 50;
  std::uint64_t seed = 0;
  double floatSlack = 1e-9;
};

/// Boundedness check: the certified constant must dominate every sampled
/// ratio. Verdict "hypothesis-unmet" (not a failure) when N <= N0.
Report boundednessExperiment(const Tensor& t, const ExperimentParams& params);

struct CompactnessExperiment {
  Tensor theta;
  WeightedSequence b;
  HolderTriple triple = holderTriple(Exponent::finite(2.0), Exponent::finite(2.0));
  std::vector<double> epsilons;
  int samples = 50;
  std::uint64_t seed = 0;
  int N = 2;
  int radius = 12;
  int slot = 1;
};

/// Uniform tail of the commutator over sampled unit pairs:
/// tail(j0) = sup over the sample of ( sum_{|j| > j0} |([T,b](f,g))_j|^r )^{1/r}.
struct TailCurve {
  std::vector<std::pair<int, double>> points;  // (j0, tail)
  double fittedSlope = 0.0;                    // log tail vs log j0

  ojson toJson() const;
  std::string toCsv() const;
};

/// Evidence for commutator compactness: tail decay over a sampled unit ball,
/// the explicit rate bound with all chain constants computed on the
/// truncation, and the fitted log-log slope. Rejects r = infinity.
std::pair<TailCurve, Report> compactnessExperiment(const CompactnessExperiment& e);

/// Evaluates the order-(0,0) seminorm quotient along the ray j = 2k = 2l and
/// reports divergence evidence (growth by the divergence factor between
/// Rmax/2 and Rmax) with the witness triple.
Report negativeWitnessScan(const Tensor& thetaV, double omega, int N, int rmax, double divergenceFactor = 2.0);

/// Membership scan for the convolution-plane tensor of a symbol of order
/// omega0, run at order omega0 + 2N, plus the reduced on-plane bound
/// |Delta_2^alpha Delta_3^beta Theta_Phi| <= C_{alpha,beta} <|k| + |j-k|>^{omega0-|alpha|-|beta|}
/// with the constants' radius stability reported.
Report lemmaXScan(SymbolPtr phi, int N, int alphaMax, int betaMax, int radius, double stabilityTol = 0.10);

/// Membership scan for vhat(j-k-l) Phi(k,l) at order phi->order() + 2N.
Report vPhiScan(const WeightedSequence& vhat, SymbolPtr phi, int N, int radius, const MembershipOptions& opts = {});

}  // namespace dbo
