#include "dbo/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dbo/parallel.hpp"
#include "dbo/weights.hpp"

namespace dbo {

namespace {

ojson pointJson(const Point& p) {
  ojson a = ojson::array();
  for (int m = 0; m < p.dim(); ++m) a.push_back(p[m]);
  return a;
}

double offDiagonalFactor(const Point& j, const Point& k, const Point& l, int N) {
  return bracketPow((j - k).normEuclid() + (j - l).normEuclid(), 2.0 * N);
}

struct BlockState {
  double value = 0.0;
  bool hasArg = false;
  Point aj, ak, al;
  double boundary = 0.0;
};

}  // namespace

ojson ScanResult::toJson() const {
  ojson j;
  j["value"] = value;
  j["argmax"] = ojson::array({pointJson(argJ), pointJson(argK), pointJson(argL)});
  j["radius"] = radius;
  j["boundaryRatio"] = boundaryRatio;
  return j;
}

ScanResult scanSupremum(const Tensor& t, int radius,
                        const std::function<double(const Point&, const Point&, const Point&, double)>& quotient,
                        bool skipZeros) {
  if (radius < 1) throw std::invalid_argument("scan radius must be >= 1");
  TripleEnumerator en(t, radius);
  const std::int64_t n = en.primaryCount();
  const std::int64_t blockSize = 16;
  const std::size_t nBlocks = static_cast<std::size_t>((n + blockSize - 1) / blockSize);
  std::vector<BlockState> states(nBlocks);

  forBlocks(n, blockSize, [&](std::size_t b, std::int64_t begin, std::int64_t end) {
    BlockState st;
    for (std::int64_t p = begin; p < end; ++p) {
      en.visitPrimary(p, [&](const Point& j, const Point& k, const Point& l) {
        const double mag = std::abs(t(j, k, l));
        if (skipZeros && mag == 0.0) return;
        const double q = quotient(j, k, l, mag);
        if (!st.hasArg || q > st.value) {
          st.value = q;
          st.aj = j;
          st.ak = k;
          st.al = l;
          st.hasArg = true;
        }
        const int shell = std::max({j.normSup(), k.normSup(), l.normSup()});
        if (shell == radius) st.boundary = std::max(st.boundary, q);
      });
    }
    states[b] = st;
  });

  ScanResult r;
  r.radius = radius;
  r.argJ = Point::zero(t.dim());
  r.argK = Point::zero(t.dim());
  r.argL = Point::zero(t.dim());
  bool any = false;
  for (const BlockState& st : states) {
    if (st.hasArg && (!any || st.value > r.value)) {
      r.value = st.value;
      r.argJ = st.aj;
      r.argK = st.ak;
      r.argL = st.al;
      any = true;
    }
    r.boundaryRatio = std::max(r.boundaryRatio, st.boundary);
  }
  return r;
}

ScanResult normOmegaN(const Tensor& t, double omega, int N, int radius) {
  return normTwoOrder(t, omega, omega, N, radius);
}

ScanResult normZeroN(const Tensor& t, int N, int radius) { return normTwoOrder(t, 0.0, 0.0, N, radius); }

ScanResult normTwoOrder(const Tensor& t, double omega1, double omega2, int N, int radius) {
  if (N < 1) throw std::invalid_argument("norm order N must be >= 1");
  return scanSupremum(t, radius, [omega1, omega2, N](const Point& j, const Point& k, const Point& l, double mag) {
    const double den =
        bracketPow(j.normEuclid() + k.normEuclid(), omega1) * bracketPow(j.normEuclid() + l.normEuclid(), omega2);
    return mag * offDiagonalFactor(j, k, l, N) / den;
  });
}

ScanResult seminorm00(const Tensor& t, double omega, int N, int radius) {
  return btSeminorm(t, MultiIndex::zero(t.dim()), MultiIndex::zero(t.dim()), omega, N, radius);
}

ScanResult btSeminorm(const Tensor& t, const MultiIndex& alpha, const MultiIndex& beta, double omega, int N,
                      int radius) {
  if (N < 1) throw std::invalid_argument("seminorm order N must be >= 1");
  const Tensor diff = t.difference(alpha, beta);
  const double orderDrop = omega - static_cast<double>(alpha.absSum() + beta.absSum());
  return scanSupremum(diff, radius, [orderDrop, N](const Point& j, const Point& k, const Point& l, double mag) {
    const double den = bracketPow(j.normEuclid() + k.normEuclid() + l.normEuclid(), orderDrop);
    return mag * offDiagonalFactor(j, k, l, N) / den;
  });
}

SeminormScan btSeminormWithNoise(const Tensor& t, const MultiIndex& alpha, const MultiIndex& beta, double omega,
                                 int N, int radius) {
  SeminormScan out;
  out.scan = btSeminorm(t, alpha, beta, omega, N, radius);

  const Tensor diff = t.difference(alpha, beta);
  const double orderDrop = omega - static_cast<double>(alpha.absSum() + beta.absSum());
  constexpr double eps = 2.220446049250313e-16;
  const ScanResult mags = scanSupremum(
      diff, radius,
      [&](const Point& j, const Point& k, const Point& l, double) {
        const double den = bracketPow(j.normEuclid() + k.normEuclid() + l.normEuclid(), orderDrop);
        return diff.magnitudeAt(j, k, l) * offDiagonalFactor(j, k, l, N) / den;
      },
      /*skipZeros=*/false);
  out.noise = eps * mags.value;
  return out;
}

namespace {

// Iterated reduction for the mixed norm: axes[level] = (slot, exponent), level
// 0 outermost. Values below the innermost level are |Theta(j,k,l)|.
double mixedReduce(const Tensor& t, const Box& cube, std::array<std::pair<int, Exponent>, 3> axes, int level,
                   std::array<Point, 3>& idx) {
  const auto [slot, exp] = axes[static_cast<std::size_t>(level)];
  const bool innermost = level == 2;
  double accSum = 0.0;
  double accSup = 0.0;
  cube.forEach([&](const Point& p) {
    idx[static_cast<std::size_t>(slot)] = p;
    const double v = innermost ? std::abs(t(idx[0], idx[1], idx[2])) : mixedReduce(t, cube, axes, level + 1, idx);
    if (exp.isInf())
      accSup = std::max(accSup, v);
    else if (v != 0.0)
      accSum += std::pow(v, exp.value());
  });
  return exp.isInf() ? accSup : std::pow(accSum, 1.0 / exp.value());
}

double mixedNormOrdered(const Tensor& t, const HolderTriple& triple, int radius,
                        const std::array<int, 3>& nesting) {
  const Box cube = Box::cube(t.dim(), radius);
  const std::array<Exponent, 3> slotExp = {triple.r, triple.pDual, triple.qDual};
  auto axis = [&](int level) {
    const int slot = nesting[static_cast<std::size_t>(level)];
    return std::pair<int, Exponent>{slot, slotExp[static_cast<std::size_t>(slot)]};
  };
  const std::array<std::pair<int, Exponent>, 3> axes = {axis(0), axis(1), axis(2)};
  std::array<Point, 3> idx = {Point::zero(t.dim()), Point::zero(t.dim()), Point::zero(t.dim())};
  return mixedReduce(t, cube, axes, 0, idx);
}

}  // namespace

double mixedLebesgueNorm(const Tensor& t, const HolderTriple& triple, int radius) {
  if (radius < 1) throw std::invalid_argument("mixed norm radius must be >= 1");
  return mixedNormOrdered(t, triple, radius, {0, 1, 2});
}

double mixedLebesgueNormMin(const Tensor& t, const HolderTriple& triple, int radius) {
  if (radius < 1) throw std::invalid_argument("mixed norm radius must be >= 1");
  std::array<int, 3> nesting = {0, 1, 2};
  std::sort(nesting.begin(), nesting.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, mixedNormOrdered(t, triple, radius, nesting));
  } while (std::next_permutation(nesting.begin(), nesting.end()));
  return best;
}

double n0Threshold(int d, double omega, double s1, double s2) {
  return static_cast<double>(d) + std::max(omega, 0.0) + 0.5 * (std::abs(s1 + omega) + std::abs(s2 + omega));
}

std::vector<MultiIndex> multiIndicesUpTo(int d, int maxOrder) {
  std::vector<MultiIndex> out;
  Box::cube(d, maxOrder).forEach([&](const Point& p) {
    if (p.absSum() <= maxOrder) out.push_back(p);
  });
  return out;
}

Report btMembershipScan(const Tensor& t, double omega, int N, const MembershipOptions& opts, int radius) {
  if (opts.alphaMax < 0 || opts.betaMax < 0) throw std::invalid_argument("membership scan orders must be >= 0");

  const auto alphas = multiIndicesUpTo(t.dim(), opts.alphaMax);
  const auto betas = multiIndicesUpTo(t.dim(), opts.betaMax);

  ojson entries = ojson::array();
  bool allStable = true;
  bool violation = false;
  ojson witness;

  // Values at or below this multiple of the cancellation floor are treated as
  // numerically zero; rounding debris must not drive verdicts.
  constexpr double kNoiseMult = 256.0;

  for (const MultiIndex& a : alphas) {
    for (const MultiIndex& b : betas) {
      const SeminormScan atR = btSeminormWithNoise(t, a, b, omega, N, radius);
      const SeminormScan at2R = btSeminormWithNoise(t, a, b, omega, N, 2 * radius);
      const bool live = at2R.scan.value > kNoiseMult * at2R.noise;
      const double ref = std::max(atR.scan.value, 1e-300);
      const double relChange = live ? std::abs(at2R.scan.value - atR.scan.value) / ref : 0.0;
      const bool stable = relChange <= opts.stabilityTol;
      const bool grew = live && atR.scan.value > 0.0 && at2R.scan.value >= opts.divergenceFactor * atR.scan.value;
      const int argShell =
          std::max({at2R.scan.argJ.normSup(), at2R.scan.argK.normSup(), at2R.scan.argL.normSup()});
      const bool argOnBoundary = argShell == 2 * radius;

      ojson e;
      e["alpha"] = pointJson(a);
      e["beta"] = pointJson(b);
      e["valueAtR"] = atR.scan.value;
      e["valueAt2R"] = at2R.scan.value;
      e["noiseFloorAt2R"] = at2R.noise;
      e["belowNoise"] = !live;
      e["relChange"] = relChange;
      e["stable"] = stable;
      e["argmaxAt2R"] =
          ojson::array({pointJson(at2R.scan.argJ), pointJson(at2R.scan.argK), pointJson(at2R.scan.argL)});
      entries.push_back(e);

      if (!stable) allStable = false;
      if (grew && argOnBoundary && !violation) {
        violation = true;
        witness = ojson{
            {"alpha", pointJson(a)},
            {"beta", pointJson(b)},
            {"triple", ojson::array({pointJson(at2R.scan.argJ), pointJson(at2R.scan.argK), pointJson(at2R.scan.argL)})},
            {"valueAtR", atR.scan.value},
            {"valueAt2R", at2R.scan.value}};
      }
    }
  }

  Report rep;
  rep.doc["kind"] = "bt-membership";
  rep.doc["params"] = ojson{{"omega", omega},
                            {"N", N},
                            {"alphaMax", opts.alphaMax},
                            {"betaMax", opts.betaMax},
                            {"radius", radius},
                            {"stabilityTol", opts.stabilityTol},
                            {"divergenceFactor", opts.divergenceFactor},
                            {"noiseMultiplier", kNoiseMult}};
  rep.doc["family"] = t.family();
  rep.doc["seminorms"] = entries;
  if (violation) {
    rep.doc["verdict"] = "violation";
    rep.doc["witness"] = witness;
  } else if (allStable) {
    rep.doc["verdict"] = "consistent-with-membership";
  } else {
    rep.doc["verdict"] = "inconclusive";
  }
  return rep;
}

}  // namespace dbo
