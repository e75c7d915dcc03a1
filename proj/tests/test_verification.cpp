#include <doctest.h>

#include "dbo/sampling.hpp"
#include "dbo/verification.hpp"
#include "oracles.hpp"

using namespace dbo;
using oracle::approxRel;

namespace {

WeightedSequence onesOnCube(int d, int radius) {
  return WeightedSequence::build(Box::cube(d, radius), [](const Point&) { return Complex(1.0, 0.0); });
}

ExperimentParams baseParams() {
  ExperimentParams p;
  p.triple = holderTriple(Exponent::finite(2.0), Exponent::finite(2.0));
  p.radius = 8;
  p.samples = 30;
  p.seed = 17;
  return p;
}

}  // namespace

TEST_CASE("boundednessExperiment passes on the stock families") {
  ExperimentParams p = baseParams();
  p.N = 2;

  const Tensor diag = Tensor::diagonalCutoff(onesOnCube(1, 20), 60);
  const Report r1 = boundednessExperiment(diag, p);
  CHECK(r1.verdict() == "pass");

  // Plane family with a symbol of order -2N and the reduced (s1 = s2 = 0)
  // hypothesis N > d; cross-check five seeded ratios against the naive
  // application path.
  p.N = 2;
  const Tensor t2 = Tensor::convolutionPhiDiff(makeBracketPowerSymbol(1, -4.0));
  const Report r2 = boundednessExperiment(t2, p);
  CHECK(r2.verdict() == "pass");
  const double upper = r2.doc["certificate"]["upper"].get<double>();
  const auto pairs = sampleUnitPairs(1, p.radius, p.triple.p, {0.0}, p.triple.q, {0.0}, 5, p.seed);
  for (const auto& [f, g] : pairs) {
    const WeightedSequence out = oracle::naiveApply(t2, f, g, p.radius);
    const double ratio = weightedNorm(out, {0.0}, Exponent::finite(1.0));
    CHECK(ratio <= upper * (1.0 + 1e-9));
  }

  // Weighted variant exercising the full threshold.
  ExperimentParams pw = baseParams();
  pw.s1 = 0.5;
  pw.s2 = -0.5;
  pw.omega = 0.5;
  pw.N = 4;  // N0 = 1 + 0.5 + (1 + 0)/2 = 2; N = 4 comfortably above
  const Tensor banded = oracle::randomBandedTensor(1, 4, 2, 2101);
  const Report r3 = boundednessExperiment(banded, pw);
  CHECK(r3.verdict() == "pass");
}

TEST_CASE("boundednessExperiment reports an unmet hypothesis") {
  ExperimentParams p = baseParams();
  p.N = 1;  // N0 = d = 1 requires N > 1
  const Tensor diag = Tensor::diagonalCutoff(onesOnCube(1, 20), 60);
  const Report r = boundednessExperiment(diag, p);
  CHECK(r.verdict() == "hypothesis-unmet");
  CHECK(r.passed());
}

TEST_CASE("compactness trivial zero cases") {
  CompactnessExperiment e{Tensor::diagonalCutoff(onesOnCube(1, 20), 60),
                          WeightedSequence::deltaAtOrigin(1),
                          holderTriple(Exponent::finite(2.0), Exponent::finite(2.0)),
                          {1e-2, 1e-4},
                          20,
                          3,
                          3,
                          10,
                          1};

  // Diagonal tensor: the commutator vanishes termwise.
  auto [curve1, rep1] = compactnessExperiment(e);
  CHECK(rep1.verdict() == "pass");
  for (const auto& [j0, tail] : curve1.points) CHECK(tail == 0.0);

  // Zero multiplier.
  e.theta = Tensor::convolutionPhiDiff(makeBracketPowerSymbol(1, -6.0));
  e.b = WeightedSequence(1);
  auto [curve2, rep2] = compactnessExperiment(e);
  CHECK(rep2.verdict() == "pass");
  for (const auto& [j0, tail] : curve2.points) CHECK(tail == 0.0);
}

TEST_CASE("compactness tail decay for the plane family") {
  CompactnessExperiment e{Tensor::convolutionPhiDiff(makeBracketPowerSymbol(1, -6.0)),
                          WeightedSequence::deltaAtOrigin(1),
                          holderTriple(Exponent::finite(2.0), Exponent::finite(2.0)),
                          {1e-1, 1e-3, 1e-6},
                          40,
                          7,
                          3,
                          14,
                          1};
  auto [curve, rep] = compactnessExperiment(e);
  CHECK(rep.verdict() == "pass");
  CHECK(rep.doc["monotone"].get<bool>());
  CHECK(rep.doc["rateBoundHolds"].get<bool>());
  CHECK(curve.fittedSlope <= -(3.0 - 1.0) + 0.5);

  // Tails shrink below each epsilon at some finite cut.
  for (const auto& row : rep.doc["epsilonThresholds"]) CHECK(row["j0"].get<int>() >= 0);

  CHECK_THROWS_AS(
      compactnessExperiment(CompactnessExperiment{e.theta, e.b, holderTriple(Exponent::inf(), Exponent::inf()),
                                                  {1e-2}, 4, 1, 3, 8, 1}),
      std::invalid_argument);
}

TEST_CASE("negativeWitnessScan") {
  // V == 1 (vhat = delta_0): the ray quotient grows like <j>^{2N - omega}.
  const Tensor tv = Tensor::multiplication(WeightedSequence::deltaAtOrigin(1));
  const Report diverging = negativeWitnessScan(tv, 0.0, 2, 64);
  CHECK(diverging.verdict() == "violation");
  CHECK(diverging.doc["witness"]["ray"] == "j = 2k = 2l");

  // At omega = 2N the same quotient stays bounded on the ray.
  const Report bounded = negativeWitnessScan(tv, 4.0, 2, 64);
  CHECK(bounded.verdict() == "no-divergence-evidence");

  // Smooth nonconstant V with vhat supported in radius 2.
  std::vector<std::pair<Point, Complex>> es = {
      {Point{0}, 1.0}, {Point{1}, 0.4}, {Point{-1}, 0.4}, {Point{2}, 0.1}, {Point{-2}, 0.1}};
  const Tensor tv2 = Tensor::multiplication(WeightedSequence::fromEntries(1, es));
  const Report diverging2 = negativeWitnessScan(tv2, 0.0, 2, 64);
  CHECK(diverging2.verdict() == "violation");
}

TEST_CASE("membership scans reproduce the example families") {
  MembershipOptions opts;

  // Diagonal with cutoff: consistent at order zero for any N.
  const Report r1 = btMembershipScan(Tensor::diagonalCutoff(onesOnCube(1, 8), 10), 0.0, 3, opts, 20);
  CHECK(r1.verdict() == "consistent-with-membership");

  // Plane family with a smooth symbol of order -2N: consistent at order zero.
  const Report r2 = btMembershipScan(Tensor::convolutionPhiDiff(makeBracketPowerSymbol(1, -4.0)), 0.0, 2, opts, 20);
  CHECK(r2.verdict() == "consistent-with-membership");

  // Multiplication tensor at omega = 0 < 2N: violation, consistent with the
  // ray witness scan.
  const Report r3 = btMembershipScan(Tensor::multiplication(WeightedSequence::deltaAtOrigin(1)), 0.0, 2, opts, 16);
  CHECK(r3.verdict() == "violation");
}

TEST_CASE("lemmaXScan") {
  // Constant symbol: nothing survives differencing; trivially consistent.
  const Report r0 = lemmaXScan(makeConstantSymbol(1, Complex(1.0, 0.0)), 2, 2, 2, 12);
  CHECK(r0.verdict() == "consistent-with-membership");

  // Monomial: consistent at |a| + |b| + 2N.
  const Report r1 = lemmaXScan(makeMonomialSymbol(MultiIndex{1}, MultiIndex{1}), 2, 2, 2, 12);
  CHECK(r1.verdict() == "consistent-with-membership");
  CHECK(r1.doc["params"]["testedOrder"].get<double>() == 2.0 + 4.0);

  // Smooth inverse-bracket of order -1: consistent at -1 + 2N.
  const Report r2 = lemmaXScan(makeBracketPowerSymbol(1, -1.0), 2, 2, 2, 12);
  CHECK(r2.verdict() == "consistent-with-membership");
}

TEST_CASE("vPhiScan") {
  MembershipOptions opts;

  // vhat = delta_0 collapses to the plane tensor: identical seminorm tables.
  const SymbolPtr phi = makeBracketPowerSymbol(1, -1.0);
  const Report viaV = vPhiScan(WeightedSequence::deltaAtOrigin(1), phi, 2, 12, opts);
  const Report direct = lemmaXScan(phi, 2, opts.alphaMax, opts.betaMax, 12);
  CHECK(viaV.verdict() == "consistent-with-membership");
  const auto& a = viaV.doc["membership"]["seminorms"];
  const auto& b = direct.doc["membership"]["seminorms"];
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(approxRel(a[i]["valueAtR"].get<double>(), b[i]["valueAtR"].get<double>()));
  }

  // Smooth V with a constant symbol: stable at order 2N.
  std::vector<std::pair<Point, Complex>> es = {{Point{0}, 1.0}, {Point{1}, 0.3}, {Point{-1}, 0.3}};
  const Report r2 = vPhiScan(WeightedSequence::fromEntries(1, es), makeConstantSymbol(1, Complex(1.0, 0.0)), 2, 12,
                             opts);
  CHECK(r2.verdict() == "consistent-with-membership");

  // Variable-coefficient operator assembled from several terms, order
  // omega0 = 1: consistent at omega0 + 2N.
  const Tensor combo = Tensor::linearCombination(std::vector<std::pair<Complex, Tensor>>{
      {Complex(1.0, 0.0),
       Tensor::variableCoefficient(WeightedSequence::fromEntries(1, es),
                                   makeMonomialSymbol(MultiIndex{1}, MultiIndex{0}))},
      {Complex(0.5, 0.0),
       Tensor::variableCoefficient(WeightedSequence::deltaAtOrigin(1), makeMonomialSymbol(MultiIndex{0}, MultiIndex{1}))},
      {Complex(0.0, 2.0),
       Tensor::variableCoefficient(WeightedSequence::fromEntries(1, es), makeMonomialSymbol(MultiIndex{0}, MultiIndex{0}))}});
  const Report r3 = btMembershipScan(combo, 1.0 + 2.0 * 2.0, 2, MembershipOptions{}, 12);
  CHECK(r3.verdict() == "consistent-with-membership");
}

TEST_CASE("membership and witness scans in two dimensions") {
  MembershipOptions opts;
  opts.alphaMax = 1;
  opts.betaMax = 1;

  const Tensor tv = Tensor::multiplication(WeightedSequence::deltaAtOrigin(2));
  const Report rv = btMembershipScan(tv, 0.0, 2, opts, 5);
  CHECK(rv.verdict() == "violation");
  CHECK(negativeWitnessScan(tv, 0.0, 2, 32).verdict() == "violation");
  CHECK(negativeWitnessScan(tv, 4.0, 2, 32).verdict() == "no-divergence-evidence");

  const Tensor mono2 = Tensor::convolutionMonomial(MultiIndex{1, 0}, MultiIndex{0, 0});
  const Report rm = btMembershipScan(mono2, 1.0 + 2.0 * 2.0, 2, opts, 6);
  CHECK(rm.verdict() == "consistent-with-membership");
}

TEST_CASE("negative witness and membership scans agree") {
  const Tensor tv = Tensor::multiplication(WeightedSequence::deltaAtOrigin(1));
  const Report witness = negativeWitnessScan(tv, 0.0, 2, 32);
  const Report member = btMembershipScan(tv, 0.0, 2, MembershipOptions{}, 8);
  CHECK(witness.verdict() == "violation");
  CHECK(member.verdict() != "consistent-with-membership");
}

TEST_CASE("reports are deterministic") {
  ExperimentParams p = baseParams();
  p.N = 3;
  const Tensor t = Tensor::convolutionPhiDiff(makeBracketPowerSymbol(1, -6.0));
  const Report a = boundednessExperiment(t, p);
  const Report b = boundednessExperiment(t, p);
  CHECK(a.dump() == b.dump());

  const Report w1 = negativeWitnessScan(Tensor::multiplication(WeightedSequence::deltaAtOrigin(1)), 0.0, 2, 32);
  const Report w2 = negativeWitnessScan(Tensor::multiplication(WeightedSequence::deltaAtOrigin(1)), 0.0, 2, 32);
  CHECK(w1.dump() == w2.dump());
}
