#include "dbo/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dbo {

namespace {

// Tight bounding box of the nonzero entries; empty box if all zero.
Box tightBox(int dim, const std::vector<std::pair<Point, Complex>>& entries) {
  Box b = Box::empty(dim);
  bool first = true;
  for (const auto& [p, v] : entries) {
    if (v == Complex(0.0, 0.0)) continue;
    if (first) {
      b = Box::single(p);
      first = false;
    } else {
      b = b.hull(Box::single(p));
    }
  }
  return b;
}

}  // namespace

WeightedSequence WeightedSequence::delta(int dim, const Point& at, Complex value) {
  std::pair<Point, Complex> e{at, value};
  return fromEntries(dim, std::span<const std::pair<Point, Complex>>(&e, 1));
}

WeightedSequence WeightedSequence::deltaAtOrigin(int dim, Complex value) {
  return delta(dim, Point::zero(dim), value);
}

WeightedSequence WeightedSequence::fromEntries(int dim, std::span<const std::pair<Point, Complex>> entries) {
  std::vector<std::pair<Point, Complex>> es(entries.begin(), entries.end());
  for (const auto& [p, v] : es)
    if (p.dim() != dim) throw std::invalid_argument("entry dimension mismatch");
  WeightedSequence f(dim);
  f.box_ = tightBox(dim, es);
  if (f.box_.isEmpty()) return f;
  f.values_.assign(static_cast<std::size_t>(f.box_.volume()), Complex(0.0, 0.0));
  for (const auto& [p, v] : es)
    if (v != Complex(0.0, 0.0)) f.values_[static_cast<std::size_t>(f.box_.linearIndex(p))] += v;
  return f;
}

WeightedSequence WeightedSequence::build(const Box& support, const std::function<Complex(const Point&)>& gen) {
  WeightedSequence f(support.dim());
  if (support.isEmpty()) return f;
  f.box_ = support;
  f.values_.assign(static_cast<std::size_t>(support.volume()), Complex(0.0, 0.0));
  support.forEach([&](const Point& p) { f.values_[static_cast<std::size_t>(support.linearIndex(p))] = gen(p); });
  return f;
}

void WeightedSequence::forEachStored(const std::function<void(const Point&, Complex)>& fn) const {
  if (box_.isEmpty()) return;
  box_.forEach([&](const Point& p) { fn(p, values_[static_cast<std::size_t>(box_.linearIndex(p))]); });
}

double weightedNorm(const WeightedSequence& f, WeightParams w, Exponent p) {
  if (!p.inAdmissibleRange()) throw std::invalid_argument("weightedNorm requires p in [1, infinity]");
  if (p.isInf()) {
    double sup = 0.0;
    f.forEachStored([&](const Point& k, Complex v) { sup = std::max(sup, powerWeight(k, w) * std::abs(v)); });
    return sup;
  }
  const double pe = p.value();
  double sum = 0.0;
  f.forEachStored([&](const Point& k, Complex v) {
    const double t = powerWeight(k, w) * std::abs(v);
    if (t != 0.0) sum += std::pow(t, pe);
  });
  return std::pow(sum, 1.0 / pe);
}

WeightedSequence pointwiseMultiply(const WeightedSequence& b, const WeightedSequence& f) {
  if (b.dim() != f.dim()) throw std::invalid_argument("pointwiseMultiply: dimension mismatch");
  const Box common = b.support().intersect(f.support());
  if (common.isEmpty()) return WeightedSequence(f.dim());
  return WeightedSequence::build(common, [&](const Point& k) { return b.at(k) * f.at(k); });
}

WeightedSequence add(const WeightedSequence& f, const WeightedSequence& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("add: dimension mismatch");
  const Box all = f.support().hull(g.support());
  if (all.isEmpty()) return WeightedSequence(f.dim());
  return WeightedSequence::build(all, [&](const Point& k) { return f.at(k) + g.at(k); });
}

WeightedSequence scaled(const WeightedSequence& f, Complex c) {
  if (f.support().isEmpty()) return WeightedSequence(f.dim());
  return WeightedSequence::build(f.support(), [&](const Point& k) { return c * f.at(k); });
}

}  // namespace dbo
