#include "dbo/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dbo/sampling.hpp"
#include "dbo/weights.hpp"

namespace dbo {

namespace {

ojson pointJson(const Point& p) {
  ojson a = ojson::array();
  for (int m = 0; m < p.dim(); ++m) a.push_back(p[m]);
  return a;
}

ojson tripleParams(const HolderTriple& t) {
  return ojson{{"p", t.p.str()}, {"q", t.q.str()}, {"r", t.r.str()}};
}

}  // namespace

Report boundednessExperiment(const Tensor& t, const ExperimentParams& params) {
  Report rep;
  rep.doc["kind"] = "boundedness";
  rep.doc["params"] = ojson{{"triple", tripleParams(params.triple)}, {"s1", params.s1},       {"s2", params.s2},
                            {"omega", params.omega},                 {"N", params.N},         {"radius", params.radius},
                            {"samples", params.samples},             {"seed", params.seed},   {"floatSlack", params.floatSlack}};
  rep.doc["family"] = t.family();

  const double n0 = n0Threshold(t.dim(), params.omega, params.s1, params.s2);
  rep.doc["N0"] = n0;
  if (!(static_cast<double>(params.N) > n0)) {
    rep.doc["verdict"] = "hypothesis-unmet";
    return rep;
  }

  BoundCertificate cert =
      schurUpperBound(t, params.triple, params.s1, params.s2, params.omega, params.N, params.radius);
  EmpiricalScan scan = empiricalOperatorScan(t, params.triple, params.s1, params.s2, params.omega, params.radius,
                                             params.samples, params.seed);
  cert.lowerEmpirical = scan.best;

  double maxRatio = 0.0;
  std::size_t worst = 0;
  bool ok = true;
  const double slack = params.floatSlack * (1.0 + cert.upper);
  for (std::size_t i = 0; i < scan.sampleValues.size(); ++i) {
    const double v = scan.sampleValues[i];
    if (v > maxRatio) {
      maxRatio = v;
      worst = i;
    }
    if (v > cert.upper + slack) ok = false;
  }
  if (scan.ascended > cert.upper + slack) ok = false;

  rep.doc["certificate"] = cert.toJson();
  rep.doc["maxSampledRatio"] = maxRatio;
  rep.doc["ascendedRatio"] = scan.ascended;
  rep.doc["worstSampleIndex"] = static_cast<std::int64_t>(worst);
  rep.doc["verdict"] = ok ? "pass" : "fail";
  return rep;
}

// ---------------------------------------------------------------------------

ojson TailCurve::toJson() const {
  ojson pts = ojson::array();
  for (const auto& [j0, tail] : points) pts.push_back(ojson::array({j0, tail}));
  return ojson{{"points", pts}, {"fittedSlope", fittedSlope}};
}

std::string TailCurve::toCsv() const {
  std::ostringstream os;
  os << "j0,tail\n";
  os.precision(17);
  for (const auto& [j0, tail] : points) os << j0 << "," << tail << "\n";
  return os.str();
}

std::pair<TailCurve, Report> compactnessExperiment(const CompactnessExperiment& e) {
  if (e.triple.r.isInf()) throw std::invalid_argument("compactness experiment requires r < infinity");
  if (e.triple.r.value() < 1.0) throw std::invalid_argument("compactness experiment requires r >= 1");
  for (double eps : e.epsilons)
    if (!(eps > 0.0)) throw std::invalid_argument("epsilons must be strictly positive");
  if (e.slot != 1 && e.slot != 2) throw std::invalid_argument("commutator slot must be 1 or 2");

  const int d = e.theta.dim();
  const int R = e.radius;
  const double r = e.triple.r.value();

  Report rep;
  rep.doc["kind"] = "compactness";
  rep.doc["params"] = ojson{{"triple", tripleParams(e.triple)}, {"N", e.N},           {"radius", R},
                            {"samples", e.samples},             {"seed", e.seed},     {"slot", e.slot},
                            {"epsilons", e.epsilons}};
  rep.doc["family"] = e.theta.family();

  if (!(e.N > d)) {
    rep.doc["verdict"] = "hypothesis-unmet";
    return {TailCurve{}, rep};
  }

  // j1: radius of the multiplier support (at least 1).
  int j1 = 1;
  e.b.forEachStored([&](const Point& k, Complex v) {
    if (v != Complex(0.0, 0.0)) j1 = std::max(j1, static_cast<int>(std::ceil(k.normEuclid())));
  });
  rep.doc["j1"] = j1;

  // Shell sums per sample; tail(j0)^r = sum over |j|^2 > j0^2.
  const int maxJ0 = static_cast<int>(std::floor(std::sqrt(static_cast<double>(d)) * R)) + 1;
  std::vector<double> supTailPow(static_cast<std::size_t>(maxJ0 + 1), 0.0);

  const auto pairs = sampleUnitPairs(d, R, e.triple.p, WeightParams{0.0}, e.triple.q, WeightParams{0.0}, e.samples,
                                     e.seed);
  for (const auto& [f, g] : pairs) {
    const WeightedSequence h = commutator(e.theta, e.b, e.slot, f, g, R);
    std::vector<double> tailPow(static_cast<std::size_t>(maxJ0 + 1), 0.0);
    h.forEachStored([&](const Point& j, Complex v) {
      const double mag = std::abs(v);
      if (mag == 0.0) return;
      const double term = std::pow(mag, r);
      const long long jsq = j.normSqr();
      // contributes to every tail with j0^2 < |j|^2
      for (int j0 = 0; j0 <= maxJ0; ++j0) {
        if (static_cast<long long>(j0) * j0 < jsq) tailPow[static_cast<std::size_t>(j0)] += term;
      }
    });
    for (int j0 = 0; j0 <= maxJ0; ++j0)
      supTailPow[static_cast<std::size_t>(j0)] = std::max(supTailPow[static_cast<std::size_t>(j0)],
                                                          tailPow[static_cast<std::size_t>(j0)]);
  }

  TailCurve curve;
  for (int j0 = 0; j0 <= maxJ0; ++j0)
    curve.points.emplace_back(j0, std::pow(supTailPow[static_cast<std::size_t>(j0)], 1.0 / r));

  // Log-log slope over j0 >= max(1, 2 j1) with nonzero tails.
  int fitPoints = 0;
  {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [j0, tail] : curve.points) {
      if (j0 < std::max(1, 2 * j1) || tail <= 0.0) continue;
      const double x = std::log(static_cast<double>(j0));
      const double y = std::log(tail);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++fitPoints;
    }
    curve.fittedSlope =
        fitPoints >= 2 ? (fitPoints * sxy - sx * sy) / (fitPoints * sxx - sx * sx) : 0.0;
  }

  // Explicit rate bound: tail(j0) <= C j1^{d/p'} <j0>^{-N + d/r} for
  // j0 >= 2 j1, with every chain factor computed on the truncation.
  const double thetaNorm = normZeroN(e.theta, e.N, R).value;
  double bSup = 0.0;
  e.b.forEachStored([&](const Point&, Complex v) { bSup = std::max(bSup, std::abs(v)); });
  double sN = 0.0;
  Box::cube(d, 2 * R).forEach([&](const Point& m) { sN += bracketPow(m.normEuclid(), -static_cast<double>(e.N)); });
  long long count = 0;
  Box::cube(d, j1).forEach([&](const Point& k) {
    if (k.normSqr() <= static_cast<long long>(j1) * j1) ++count;
  });
  const double dualRecip = e.triple.pDual.recip();  // 1/p'
  const double cCount = std::pow(static_cast<double>(count), dualRecip) /
                        std::pow(static_cast<double>(j1), d * dualRecip);
  double cTail = 0.0;
  for (int j0 = 2 * j1; j0 <= maxJ0; ++j0) {
    double tp = 0.0;
    Box::cube(d, R).forEach([&](const Point& j) {
      if (j.normSqr() > static_cast<long long>(j0) * j0)
        tp += std::pow(bracketPow(j.normEuclid(), -static_cast<double>(e.N)), r);
    });
    const double lhs = std::pow(tp, 1.0 / r);
    const double rhs = bracketPow(static_cast<double>(j0), -static_cast<double>(e.N) + d / r);
    cTail = std::max(cTail, lhs / rhs);
  }
  const double twoN = std::pow(2.0, static_cast<double>(e.N));
  const double rateC = bSup * thetaNorm * twoN * sN * cCount * cTail;

  bool rateOk = true;
  bool monotone = true;
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const auto& [j0, tail] = curve.points[i];
    if (i > 0 && tail > curve.points[i - 1].second * (1.0 + 1e-12)) monotone = false;
    if (j0 >= 2 * j1) {
      const double bound = rateC * std::pow(static_cast<double>(j1), d * dualRecip) *
                           bracketPow(static_cast<double>(j0), -static_cast<double>(e.N) + d / r);
      if (tail > bound * (1.0 + 1e-9)) rateOk = false;
    }
  }

  ojson epsTable = ojson::array();
  for (double eps : e.epsilons) {
    int found = -1;
    for (const auto& [j0, tail] : curve.points) {
      if (tail < eps) {
        found = j0;
        break;
      }
    }
    epsTable.push_back(ojson{{"epsilon", eps}, {"j0", found}});
  }

  const double slopeBound = -(static_cast<double>(e.N) - d / r) + 0.5;
  // Vacuous when the tails vanish identically (zero commutator).
  const bool slopeOk = fitPoints < 2 || curve.fittedSlope <= slopeBound;

  rep.doc["tailCurve"] = curve.toJson();
  rep.doc["epsilonThresholds"] = epsTable;
  rep.doc["rateConstant"] =
      ojson{{"C", rateC},       {"bSup", bSup},     {"thetaNorm0N", thetaNorm}, {"twoPowN", twoN},
            {"weightL1", sN},   {"countFactor", cCount}, {"tailFactor", cTail}};
  rep.doc["monotone"] = monotone;
  rep.doc["rateBoundHolds"] = rateOk;
  rep.doc["fittedSlope"] = curve.fittedSlope;
  rep.doc["slopeBound"] = slopeBound;
  rep.doc["verdict"] = (monotone && rateOk && slopeOk) ? "pass" : "fail";
  return {curve, rep};
}

// ---------------------------------------------------------------------------

Report negativeWitnessScan(const Tensor& thetaV, double omega, int N, int rmax, double divergenceFactor) {
  if (rmax < 4) throw std::invalid_argument("negativeWitnessScan: rmax must be >= 4");
  const int d = thetaV.dim();

  Report rep;
  rep.doc["kind"] = "negative-witness";
  rep.doc["params"] = ojson{{"omega", omega}, {"N", N}, {"rmax", rmax}, {"divergenceFactor", divergenceFactor}};
  rep.doc["family"] = thetaV.family();

  auto quotientAt = [&](int tstep) {
    Point kk = Point::zero(d);
    kk[0] = tstep;
    const Point jj = kk + kk;
    const double mag = std::abs(thetaV(jj, kk, kk));
    if (mag == 0.0) return 0.0;
    const double num = bracketPow((jj - kk).normEuclid() + (jj - kk).normEuclid(), 2.0 * N);
    const double den = bracketPow(jj.normEuclid() + 2.0 * kk.normEuclid(), omega);
    return mag * num / den;
  };

  ojson rayPoints = ojson::array();
  const int tMax = rmax / 2;
  const int tHalf = std::max(1, rmax / 4);
  double qMax = 0.0, qHalf = 0.0;
  for (int t = 1; t <= tMax; ++t) {
    const double q = quotientAt(t);
    rayPoints.push_back(ojson::array({2 * t, q}));
    if (t == tHalf) qHalf = q;
    if (t == tMax) qMax = q;
  }

  Point kw = Point::zero(d);
  kw[0] = tMax;
  const bool diverges = qHalf > 0.0 && qMax >= divergenceFactor * qHalf;
  rep.doc["ray"] = rayPoints;
  rep.doc["quotientAtHalf"] = qHalf;
  rep.doc["quotientAtMax"] = qMax;
  if (diverges) {
    rep.doc["witness"] = ojson{{"triple", ojson::array({pointJson(kw + kw), pointJson(kw), pointJson(kw)})},
                               {"ray", "j = 2k = 2l"}};
    rep.doc["verdict"] = "violation";
  } else {
    rep.doc["verdict"] = "no-divergence-evidence";
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report lemmaXScan(SymbolPtr phi, int N, int alphaMax, int betaMax, int radius, double stabilityTol) {
  const int d = phi->dim();
  const double omega0 = phi->order();
  const Tensor t = Tensor::convolutionPhiKL(phi);

  MembershipOptions opts;
  opts.alphaMax = alphaMax;
  opts.betaMax = betaMax;
  opts.stabilityTol = stabilityTol;
  Report member = btMembershipScan(t, omega0 + 2.0 * N, N, opts, radius);

  // Reduced on-plane bound: the scan constant C_{alpha,beta} must be
  // radius-stable. Constants at or below the cancellation floor are
  // numerically zero.
  constexpr double kNoiseMult = 256.0;
  constexpr double kEps = 2.220446049250313e-16;
  auto planeConstant = [&](const MultiIndex& a, const MultiIndex& b, int R) {
    const Tensor diff = t.difference(a, b);
    const double drop = omega0 - static_cast<double>(a.absSum() + b.absSum());
    double best = 0.0;
    double noise = 0.0;
    const Box cube = Box::cube(d, R);
    cube.forEach([&](const Point& k) {
      cube.forEach([&](const Point& l) {
        const Point j = k + l;
        if (!cube.contains(j)) return;
        const double den = bracketPow(k.normEuclid() + (j - k).normEuclid(), drop);
        best = std::max(best, std::abs(diff(j, k, l)) / den);
        noise = std::max(noise, kEps * diff.magnitudeAt(j, k, l) / den);
      });
    });
    return std::make_pair(best, noise);
  };

  ojson reduced = ojson::array();
  bool reducedStable = true;
  for (const MultiIndex& a : multiIndicesUpTo(d, alphaMax)) {
    for (const MultiIndex& b : multiIndicesUpTo(d, betaMax)) {
      const auto [cR, noiseR] = planeConstant(a, b, radius);
      const auto [c2R, noise2R] = planeConstant(a, b, 2 * radius);
      const bool live = c2R > kNoiseMult * noise2R;
      const double rel = live ? std::abs(c2R - cR) / std::max(cR, 1e-300) : 0.0;
      const bool stable = rel <= stabilityTol;
      if (!stable) reducedStable = false;
      reduced.push_back(ojson{{"alpha", pointJson(a)},
                              {"beta", pointJson(b)},
                              {"constantAtR", cR},
                              {"constantAt2R", c2R},
                              {"belowNoise", !live},
                              {"relChange", rel},
                              {"stable", stable}});
    }
  }

  Report rep;
  rep.doc["kind"] = "lemma-x";
  rep.doc["params"] = ojson{{"phi", phi->name()},   {"phiOrder", omega0}, {"N", N},
                            {"alphaMax", alphaMax}, {"betaMax", betaMax}, {"radius", radius},
                            {"testedOrder", omega0 + 2.0 * N}};
  rep.doc["membership"] = member.doc;
  rep.doc["reducedPlaneBound"] = reduced;
  const bool ok = member.verdict() == "consistent-with-membership" && reducedStable;
  rep.doc["verdict"] = ok ? "consistent-with-membership" : (member.verdict() == "violation" ? "violation" : "inconclusive");
  return rep;
}

Report vPhiScan(const WeightedSequence& vhat, SymbolPtr phi, int N, int radius, const MembershipOptions& opts) {
  const double omega0 = phi->order();
  const Tensor t = Tensor::variableCoefficient(vhat, phi);
  Report member = btMembershipScan(t, omega0 + 2.0 * N, N, opts, radius);

  Report rep;
  rep.doc["kind"] = "v-phi";
  rep.doc["params"] = ojson{{"phi", phi->name()}, {"phiOrder", omega0},      {"N", N},
                            {"radius", radius},   {"testedOrder", omega0 + 2.0 * N}};
  rep.doc["membership"] = member.doc;
  rep.doc["verdict"] = member.verdict();
  return rep;
}

}  // namespace dbo
