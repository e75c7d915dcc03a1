#include "dbo/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dbo/operator_engine.hpp"
#include "dbo/weights.hpp"

namespace dbo {

namespace {

// exp(2 pi i t) with t in units of full turns.
Complex unitPhase(double turns) {
  const double th = 2.0 * std::numbers::pi * turns;
  return {std::cos(th), std::sin(th)};
}

Box nodeBox(const TorusGrid& g) {
  return Box(Point::zero(g.d), Point::constant(g.d, g.n - 1));
}

double nodeDot(const Point& k, const Point& node, int n) {
  double s = 0.0;
  for (int m = 0; m < k.dim(); ++m) s += static_cast<double>(k[m]) * node[m];
  return s / static_cast<double>(n);
}

}  // namespace

TorusGrid TorusGrid::forBandSum(int d, int bandSum) {
  if (bandSum < 0) throw std::invalid_argument("band sum must be nonnegative");
  const int need = 2 * bandSum + 1;
  int n = 1;
  while (n < need) n *= 2;
  return TorusGrid{d, n};
}

long long TorusGrid::nodeCount() const {
  long long c = 1;
  for (int m = 0; m < d; ++m) c *= n;
  return c;
}

TorusFunction::TorusFunction(TorusGrid grid, std::vector<Complex> samples) : grid_(grid), samples_(std::move(samples)) {
  if (static_cast<long long>(samples_.size()) != grid_.nodeCount())
    throw std::invalid_argument("torus function: sample count does not match the grid");
}

Complex TorusFunction::sample(const Point& node) const {
  return samples_[static_cast<std::size_t>(nodeBox(grid_).linearIndex(node))];
}

TorusFunction TorusFunction::pointwiseProduct(const TorusFunction& a, const TorusFunction& b) {
  if (a.grid().d != b.grid().d || a.grid().n != b.grid().n)
    throw std::invalid_argument("pointwise product needs matching grids");
  std::vector<Complex> out(a.samples());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b.samples()[i];
  return TorusFunction(a.grid(), std::move(out));
}

WeightedSequence toFourier(const TorusFunction& f, int bandK) {
  const TorusGrid& g = f.grid();
  if (g.n < 2 * bandK + 1) throw std::invalid_argument("band limit exceeds the grid Nyquist range");
  const Box nodes = nodeBox(g);
  const double quad = 1.0 / static_cast<double>(g.nodeCount());
  return WeightedSequence::build(Box::cube(g.d, bandK), [&](const Point& k) {
    Complex acc(0.0, 0.0);
    nodes.forEach([&](const Point& node) { acc += f.sample(node) * unitPhase(-nodeDot(k, node, g.n)); });
    return acc * quad;
  });
}

TorusFunction fromFourier(const WeightedSequence& coeffs, const TorusGrid& grid) {
  if (coeffs.dim() != grid.d) throw std::invalid_argument("fromFourier: dimension mismatch");
  const int rad = coeffs.support().supRadius();
  if (grid.n < 2 * rad + 1) throw std::invalid_argument("coefficient support exceeds the grid Nyquist range");
  const Box nodes = nodeBox(grid);
  std::vector<Complex> samples(static_cast<std::size_t>(grid.nodeCount()), Complex(0.0, 0.0));
  nodes.forEach([&](const Point& node) {
    Complex acc(0.0, 0.0);
    coeffs.forEachStored([&](const Point& k, Complex c) {
      if (c == Complex(0.0, 0.0)) return;
      acc += c * unitPhase(nodeDot(k, node, grid.n));
    });
    samples[static_cast<std::size_t>(nodes.linearIndex(node))] = acc;
  });
  return TorusFunction(grid, std::move(samples));
}

namespace {

WeightedSequence spectralDerivative(const WeightedSequence& coeffs, const MultiIndex& a) {
  for (int m = 0; m < a.dim(); ++m)
    if (a[m] < 0) throw std::invalid_argument("derivative multi-index must be nonnegative");
  if (coeffs.support().isEmpty()) return coeffs;
  return WeightedSequence::build(coeffs.support(), [&](const Point& k) {
    Complex factor(1.0, 0.0);
    for (int m = 0; m < a.dim(); ++m)
      for (int i = 0; i < a[m]; ++i) factor *= Complex(0.0, 2.0 * std::numbers::pi) * static_cast<double>(k[m]);
    return factor * coeffs.at(k);
  });
}

}  // namespace

TorusFunction physicalDerivativeProduct(const TorusFunction& f, const TorusFunction& g, const MultiIndex& a,
                                        const MultiIndex& b, int bandF, int bandG) {
  const TorusGrid& grid = f.grid();
  if (grid.n != g.grid().n || grid.d != g.grid().d)
    throw std::invalid_argument("physicalDerivativeProduct needs matching grids");
  if (grid.n < 2 * (bandF + bandG) + 1)
    throw std::invalid_argument("grid too small for an alias-free product; need n >= " +
                                std::to_string(2 * (bandF + bandG) + 1));
  const TorusFunction df = fromFourier(spectralDerivative(toFourier(f, bandF), a), grid);
  const TorusFunction dg = fromFourier(spectralDerivative(toFourier(g, bandG), b), grid);
  return TorusFunction::pointwiseProduct(df, dg);
}

Report bridgeCheck(const Tensor& t, const TorusFunction& f, const TorusFunction& g, int bandF, int bandG) {
  const TorusGrid& grid = f.grid();
  if (grid.n != g.grid().n || grid.d != g.grid().d) throw std::invalid_argument("bridgeCheck needs matching grids");
  if (t.dim() != grid.d) throw std::invalid_argument("bridgeCheck: dimension mismatch");

  const std::string family = t.family();
  int outBand = 0;
  TorusFunction physical(grid, std::vector<Complex>(static_cast<std::size_t>(grid.nodeCount()), Complex(0.0, 0.0)));

  if (family == "convolution") {
    const MultiIndex* a = t.monomialA();
    const MultiIndex* b = t.monomialB();
    if (a == nullptr || b == nullptr)
      throw std::invalid_argument("bridgeCheck: only the monomial convolution family has a physical closed form");
    outBand = bandF + bandG;
    if (grid.n < 2 * outBand + 1)
      throw std::invalid_argument("grid too small; need n >= " + std::to_string(2 * outBand + 1));
    physical = physicalDerivativeProduct(f, g, *a, *b, bandF, bandG);
  } else if (family == "multiplication" || family == "variable_coefficient") {
    const WeightedSequence* vhat = t.vhat();
    const int bandV = vhat->support().supRadius();
    outBand = bandF + bandG + bandV;
    if (grid.n < 2 * outBand + 1)
      throw std::invalid_argument("grid too small; need n >= " + std::to_string(2 * outBand + 1));
    TorusFunction product(grid, std::vector<Complex>(static_cast<std::size_t>(grid.nodeCount()), Complex(0.0, 0.0)));
    if (family == "multiplication") {
      product = TorusFunction::pointwiseProduct(f, g);
    } else {
      const auto mono = monomialExponents(*t.phi());
      if (!mono)
        throw std::invalid_argument("bridgeCheck: variable-coefficient bridge needs a monomial symbol");
      product = physicalDerivativeProduct(f, g, mono->first, mono->second, bandF, bandG);
    }
    physical = TorusFunction::pointwiseProduct(fromFourier(*vhat, grid), product);
  } else {
    throw std::invalid_argument("bridgeCheck: family '" + family + "' has no physical-side closed form");
  }

  const WeightedSequence lhs = apply(t, toFourier(f, bandF), toFourier(g, bandG), outBand);
  const WeightedSequence rhs = toFourier(physical, outBand);

  double residual = 0.0;
  double magnitude = 0.0;
  Box::cube(grid.d, outBand).forEach([&](const Point& j) {
    residual = std::max(residual, std::abs(lhs.at(j) - rhs.at(j)));
    magnitude = std::max(magnitude, std::abs(lhs.at(j)));
  });

  const double threshold = 1e-10 * (1.0 + magnitude);
  Report rep;
  rep.doc["kind"] = "bridge-check";
  rep.doc["params"] = ojson{{"family", family}, {"bandF", bandF}, {"bandG", bandG},
                            {"gridN", grid.n},  {"outBand", outBand}};
  rep.doc["residual"] = residual;
  rep.doc["magnitude"] = magnitude;
  rep.doc["threshold"] = threshold;
  rep.doc["verdict"] = residual <= threshold ? "pass" : "fail";
  return rep;
}

double gridL2Norm(const TorusFunction& f) {
  double s = 0.0;
  for (const Complex& v : f.samples()) s += std::norm(v);
  return std::sqrt(s / static_cast<double>(f.grid().nodeCount()));
}

double gridSobolevNorm(const TorusFunction& f, double s) {
  const int nyquist = (f.grid().n - 1) / 2;
  const WeightedSequence coeffs = toFourier(f, nyquist);
  return weightedNorm(coeffs, WeightParams{s}, Exponent::finite(2.0));
}

}  // namespace dbo
