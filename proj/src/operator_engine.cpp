#include "dbo/operator_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dbo/parallel.hpp"
#include "dbo/sampling.hpp"
#include "dbo/weights.hpp"

namespace dbo {

namespace {

// Sums Theta(j,k,l) w(j,k,l) f_k g_l over the finite supports for one output
// index, pruned by the tensor support. Fixed iteration order per j.
template <typename Weight>
Complex contractAt(const Tensor& t, const Support& s, const WeightedSequence& f, const WeightedSequence& g,
                   const Point& j, Weight&& w) {
  Complex acc(0.0, 0.0);
  const bool banded = s.exact && s.kind != Support::Kind::Dense;

  if (banded && s.kind == Support::Kind::SumBand) {
    const Box offsets = Box::cube(j.dim(), s.sumWidth);
    switch (s.sumSlot) {
      case 1:  // j = k + l + m  =>  l = j - k - m
        f.forEachStored([&](const Point& k, Complex fk) {
          if (fk == Complex(0.0, 0.0)) return;
          offsets.forEach([&](const Point& m) {
            const Point l = j - k - m;
            const Complex gl = g.at(l);
            if (gl == Complex(0.0, 0.0)) return;
            acc += t(j, k, l) * w(j, k, l) * fk * gl;
          });
        });
        return acc;
      case 2:  // k = j + l + m
        g.forEachStored([&](const Point& l, Complex gl) {
          if (gl == Complex(0.0, 0.0)) return;
          offsets.forEach([&](const Point& m) {
            const Point k = j + l + m;
            const Complex fk = f.at(k);
            if (fk == Complex(0.0, 0.0)) return;
            acc += t(j, k, l) * w(j, k, l) * fk * gl;
          });
        });
        return acc;
      default:  // l = j + k + m
        f.forEachStored([&](const Point& k, Complex fk) {
          if (fk == Complex(0.0, 0.0)) return;
          offsets.forEach([&](const Point& m) {
            const Point l = j + k + m;
            const Complex gl = g.at(l);
            if (gl == Complex(0.0, 0.0)) return;
            acc += t(j, k, l) * w(j, k, l) * fk * gl;
          });
        });
        return acc;
    }
  }

  if (banded && s.kind == Support::Kind::DiagBand) {
    const Box kb = Box::around(j, s.w2).intersect(f.support());
    const Box lb = Box::around(j, s.w3).intersect(g.support());
    kb.forEach([&](const Point& k) {
      const Complex fk = f.at(k);
      if (fk == Complex(0.0, 0.0)) return;
      lb.forEach([&](const Point& l) {
        const Complex gl = g.at(l);
        if (gl == Complex(0.0, 0.0)) return;
        acc += t(j, k, l) * w(j, k, l) * fk * gl;
      });
    });
    return acc;
  }

  f.forEachStored([&](const Point& k, Complex fk) {
    if (fk == Complex(0.0, 0.0)) return;
    g.forEachStored([&](const Point& l, Complex gl) {
      if (gl == Complex(0.0, 0.0)) return;
      acc += t(j, k, l) * w(j, k, l) * fk * gl;
    });
  });
  return acc;
}

template <typename Weight>
WeightedSequence contractOnBox(const Tensor& t, const WeightedSequence& f, const WeightedSequence& g,
                               const Box& outBox, Weight&& w) {
  if (t.dim() != f.dim() || t.dim() != g.dim()) throw std::invalid_argument("apply: dimension mismatch");
  if (outBox.isEmpty() || f.isZero() || g.isZero()) return WeightedSequence(t.dim());

  const Support s = t.support();
  const long long n = outBox.volume();
  std::vector<Complex> vals(static_cast<std::size_t>(n));
  std::vector<Point> pts(static_cast<std::size_t>(n));
  {
    long long i = 0;
    outBox.forEach([&](const Point& p) { pts[static_cast<std::size_t>(i++)] = p; });
  }

  forBlocks(n, 16, [&](std::size_t, std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i)
      vals[static_cast<std::size_t>(i)] = contractAt(t, s, f, g, pts[static_cast<std::size_t>(i)], w);
  });

  std::vector<std::pair<Point, Complex>> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i)
    entries.emplace_back(pts[static_cast<std::size_t>(i)], vals[static_cast<std::size_t>(i)]);
  return WeightedSequence::fromEntries(t.dim(), entries);
}

struct UnitWeight {
  Complex operator()(const Point&, const Point&, const Point&) const { return {1.0, 0.0}; }
};

}  // namespace

WeightedSequence applyOnBox(const Tensor& t, const WeightedSequence& f, const WeightedSequence& g,
                            const Box& outBox) {
  return contractOnBox(t, f, g, outBox, UnitWeight{});
}

WeightedSequence apply(const Tensor& t, const WeightedSequence& f, const WeightedSequence& g, int outRadius) {
  if (outRadius < 0) throw std::invalid_argument("apply: outRadius must be nonnegative");
  return applyOnBox(t, f, g, Box::cube(t.dim(), outRadius));
}

WeightedSequence applyLinear(const Matrix& sigma, const WeightedSequence& f, int outRadius) {
  if (sigma.dim() != f.dim()) throw std::invalid_argument("applyLinear: dimension mismatch");
  const Box outBox = Box::cube(sigma.dim(), outRadius);
  return WeightedSequence::build(outBox, [&](const Point& j) {
    Complex acc(0.0, 0.0);
    Box kRange = f.support();
    if (sigma.band()) kRange = kRange.intersect(Box::around(j, *sigma.band()));
    kRange.forEach([&](const Point& k) {
      const Complex fk = f.at(k);
      if (fk == Complex(0.0, 0.0)) return;
      acc += sigma(j, k) * fk;
    });
    return acc;
  });
}

WeightedSequence commutator(const Tensor& t, const WeightedSequence& b, int slot, const WeightedSequence& f,
                            const WeightedSequence& g, int outRadius) {
  if (slot != 1 && slot != 2) throw std::invalid_argument("commutator slot must be 1 or 2");
  if (b.dim() != t.dim()) throw std::invalid_argument("commutator: dimension mismatch");
  const Box outBox = Box::cube(t.dim(), outRadius);
  if (slot == 1)
    return contractOnBox(t, f, g, outBox,
                         [&b](const Point& j, const Point& k, const Point&) { return b.at(k) - b.at(j); });
  return contractOnBox(t, f, g, outBox,
                       [&b](const Point& j, const Point&, const Point& l) { return b.at(l) - b.at(j); });
}

Complex dualityPairing(const Tensor& t, const WeightedSequence& f, const WeightedSequence& g,
                       const WeightedSequence& h) {
  if (h.dim() != t.dim()) throw std::invalid_argument("dualityPairing: dimension mismatch");
  if (h.isZero()) return {0.0, 0.0};
  const WeightedSequence tfg = applyOnBox(t, f, g, h.support());
  Complex acc(0.0, 0.0);
  h.forEachStored([&](const Point& j, Complex hj) { acc += tfg.at(j) * hj; });
  return acc;
}

// ---------------------------------------------------------------------------

ojson BoundCertificate::toJson() const {
  ojson j;
  j["refused"] = refused;
  if (refused) {
    j["reason"] = reason;
  } else {
    j["upper"] = upper;
    j["lowerEmpirical"] = lowerEmpirical;
    j["factors"] = ojson{{"kw", kw},     {"kw1", kw1},       {"kw2", kw2},    {"thetaNormOmegaN", thetaNorm},
                         {"l1sum1", l1sum1}, {"l1sum2", l1sum2}, {"N1", n1},      {"N2", n2}};
  }
  j["params"] = ojson{{"p", triple.p.str()}, {"q", triple.q.str()}, {"r", triple.r.str()}, {"s1", s1},
                      {"s2", s2},            {"omega", omega},      {"N", N},              {"N0", n0},
                      {"radius", radius}};
  return j;
}

BoundCertificate schurUpperBound(const Tensor& t, const HolderTriple& triple, double s1, double s2, double omega,
                                 int N, int radius) {
  BoundCertificate c;
  c.triple = triple;
  c.s1 = s1;
  c.s2 = s2;
  c.omega = omega;
  c.N = N;
  c.radius = radius;

  if (!triple.r.isInf() && triple.r.value() < 1.0)
    throw std::invalid_argument("schurUpperBound requires r >= 1");
  if (radius < 1) throw std::invalid_argument("schurUpperBound: radius must be >= 1");

  const int d = t.dim();
  c.n0 = n0Threshold(d, omega, s1, s2);
  if (!(static_cast<double>(N) > c.n0)) {
    c.refused = true;
    c.reason = "decay order N must exceed N0 = d + omega_+ + (|s1+omega| + |s2+omega|)/2 = " + std::to_string(c.n0);
    return c;
  }

  const double wplus = std::max(omega, 0.0);
  const double a1 = std::abs(s1 + omega);
  const double a2 = std::abs(s2 + omega);
  const double slack = 2.0 * N - 2.0 * (d + wplus) - a1 - a2;  // > 0 since N > N0
  c.n1 = d + wplus + a1 + 0.5 * slack;
  c.n2 = d + wplus + a2 + 0.5 * slack;

  // Pointwise weight-comparison maxima over the scanned pair cube. These make
  // the Peetre-type steps true inequalities on the truncation instead of
  // order-of-magnitude bounds.
  auto pairMax = [&](double si, double ai) {
    double best = 0.0;
    const Box cube = Box::cube(d, radius);
    cube.forEach([&](const Point& j) {
      cube.forEach([&](const Point& x) {
        const double v = bracketPow(j.normEuclid() + x.normEuclid(), omega) * bracketPow(j.normEuclid(), si) *
                         bracketPow(x.normEuclid(), -si - omega) *
                         bracketPow((j - x).normEuclid(), -wplus - ai);
        best = std::max(best, v);
      });
    });
    return best;
  };
  c.kw1 = pairMax(s1, a1);
  c.kw2 = pairMax(s2, a2);
  c.kw = c.kw1 * c.kw2;

  c.thetaNorm = normOmegaN(t, omega, N, radius).value;

  auto l1sum = [&](double ai, double ni) {
    double sum = 0.0;
    Box::cube(d, 2 * radius).forEach([&](const Point& m) { sum += bracketPow(m.normEuclid(), wplus + ai - ni); });
    return sum;
  };
  c.l1sum1 = l1sum(a1, c.n1);
  c.l1sum2 = l1sum(a2, c.n2);

  c.upper = c.kw * c.thetaNorm * c.l1sum1 * c.l1sum2;
  return c;
}

// ---------------------------------------------------------------------------

namespace {

double objective(const Tensor& t, const WeightedSequence& f, const WeightedSequence& g, int radius, WeightParams out,
                 Exponent r) {
  return weightedNorm(apply(t, f, g, radius), out, r);
}

// Exact unit maximizer for the l^1 -> l^r slot: the best weighted delta.
WeightedSequence bestDelta(const Tensor& t, bool optimizeF, const WeightedSequence& other, int radius,
                           WeightParams inW, WeightParams outW, Exponent r, double& bestVal) {
  const int d = t.dim();
  WeightedSequence best(d);
  bestVal = -1.0;
  Box::cube(d, radius).forEach([&](const Point& k) {
    WeightedSequence cand = WeightedSequence::delta(d, k, Complex(1.0 / powerWeight(k, inW), 0.0));
    const double v = optimizeF ? objective(t, cand, other, radius, outW, r) : objective(t, other, cand, radius, outW, r);
    if (v > bestVal) {
      bestVal = v;
      best = cand;
    }
  });
  return best;
}

WeightedSequence coordinateAscend(const Tensor& t, bool optimizeF, WeightedSequence cur,
                                  const WeightedSequence& other, int radius, Exponent inP, WeightParams inW,
                                  WeightParams outW, Exponent r, double step, double& bestVal) {
  const Box cube = Box::cube(t.dim(), radius);
  const Complex dirs[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  cube.forEach([&](const Point& k) {
    for (const Complex& dir : dirs) {
      WeightedSequence trial = add(cur, WeightedSequence::delta(t.dim(), k, step * dir));
      const double n = weightedNorm(trial, inW, inP);
      if (n == 0.0) continue;
      trial = scaled(trial, Complex(1.0 / n, 0.0));
      const double v =
          optimizeF ? objective(t, trial, other, radius, outW, r) : objective(t, other, trial, radius, outW, r);
      if (v > bestVal * (1.0 + 1e-15)) {
        bestVal = v;
        cur = trial;
      }
    }
  });
  return cur;
}

}  // namespace

EmpiricalScan empiricalOperatorScan(const Tensor& t, const HolderTriple& triple, double s1, double s2, double omega,
                                    int radius, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("empiricalOperatorScan: samples must be >= 1");
  const int d = t.dim();
  const WeightParams wp{s1 + omega};
  const WeightParams wq{s2 + omega};
  const WeightParams wout{s1 + s2};

  EmpiricalScan scan;
  const auto pairs = sampleUnitPairs(d, radius, triple.p, wp, triple.q, wq, samples, seed);
  std::size_t bestIdx = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double v = objective(t, pairs[i].first, pairs[i].second, radius, wout, triple.r);
    scan.sampleValues.push_back(v);
    if (v > scan.best) {
      scan.best = v;
      bestIdx = i;
    }
  }

  // Alternating ascent from the best sampled pair.
  WeightedSequence f = pairs[bestIdx].first;
  WeightedSequence g = pairs[bestIdx].second;
  double cur = scan.best;
  double step = 0.5;
  for (int round = 0; round < 10; ++round) {
    const bool optimizeF = round % 2 == 0;
    const Exponent slotExp = optimizeF ? triple.p : triple.q;
    if (!slotExp.isInf() && slotExp.value() == 1.0) {
      double v = 0.0;
      WeightedSequence cand = bestDelta(t, optimizeF, optimizeF ? g : f, radius, optimizeF ? wp : wq, wout, triple.r, v);
      if (v > cur) {
        cur = v;
        (optimizeF ? f : g) = cand;
      }
    } else {
      (optimizeF ? f : g) = coordinateAscend(t, optimizeF, optimizeF ? f : g, optimizeF ? g : f, radius,
                                             slotExp, optimizeF ? wp : wq, wout, triple.r, step, cur);
    }
    step *= 0.7;
  }
  scan.ascended = cur;
  scan.best = std::max(scan.best, cur);
  return scan;
}

double empiricalOperatorNorm(const Tensor& t, const HolderTriple& triple, double s1, double s2, double omega,
                             int radius, int samples, std::uint64_t seed) {
  return empiricalOperatorScan(t, triple, s1, s2, omega, radius, samples, seed).best;
}

double cauchySchwarzBound(const Tensor& t, int radius) {
  return mixedLebesgueNorm(t, holderTriple(Exponent::finite(2.0), Exponent::finite(2.0)), radius);
}

}  // namespace dbo
