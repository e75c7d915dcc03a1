#include <doctest.h>

#include <numbers>

#include "dbo/fourier.hpp"
#include "dbo/operator_engine.hpp"
#include "oracles.hpp"

using namespace dbo;
using oracle::approxRel;

namespace {

TorusFunction randomBandLimited(int d, int bandK, const TorusGrid& grid, std::uint64_t seed) {
  return fromFourier(oracle::randomSequence(d, bandK, seed), grid);
}

}  // namespace

TEST_CASE("single-mode convention") {
  const TorusGrid grid = TorusGrid::forBandSum(1, 4);
  // F(x) = exp(2 pi i x): coefficients must be exactly delta_1 (not delta_{-1}).
  std::vector<Complex> samples(static_cast<std::size_t>(grid.nodeCount()));
  for (int mnode = 0; mnode < grid.n; ++mnode) {
    const double th = 2.0 * std::numbers::pi * mnode / grid.n;
    samples[static_cast<std::size_t>(mnode)] = Complex(std::cos(th), std::sin(th));
  }
  const TorusFunction f(grid, std::move(samples));
  const WeightedSequence coeffs = toFourier(f, 2);
  Box::cube(1, 2).forEach([&](const Point& k) {
    const Complex want = k == Point{1} ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    CHECK(std::abs(coeffs.at(k) - want) <= 1e-12);
  });

  // F == 1 -> delta_0.
  std::vector<Complex> ones(static_cast<std::size_t>(grid.nodeCount()), Complex(1.0, 0.0));
  const WeightedSequence c0 = toFourier(TorusFunction(grid, std::move(ones)), 2);
  CHECK(std::abs(c0.at(Point{0}) - Complex(1.0, 0.0)) <= 1e-12);
  CHECK(std::abs(c0.at(Point{1})) <= 1e-12);
}

TEST_CASE("round trips") {
  for (int d : {1, 2}) {
    const int bandK = d == 1 ? 5 : 3;
    const TorusGrid grid = TorusGrid::forBandSum(d, 2 * bandK);
    const WeightedSequence coeffs = oracle::randomSequence(d, bandK, 77 + static_cast<std::uint64_t>(d));
    const WeightedSequence back = toFourier(fromFourier(coeffs, grid), bandK);
    Box::cube(d, bandK).forEach([&](const Point& k) { CHECK(std::abs(back.at(k) - coeffs.at(k)) <= 1e-12); });
  }
  CHECK_THROWS_AS(toFourier(TorusFunction(TorusGrid{1, 4}, std::vector<Complex>(4)), 3), std::invalid_argument);
}

TEST_CASE("physicalDerivativeProduct") {
  const TorusGrid grid = TorusGrid::forBandSum(1, 4);
  const TorusFunction f = randomBandLimited(1, 1, grid, 301);
  const TorusFunction g = randomBandLimited(1, 1, grid, 302);

  const TorusFunction plain = physicalDerivativeProduct(f, g, MultiIndex{0}, MultiIndex{0}, 1, 1);
  const TorusFunction prod = TorusFunction::pointwiseProduct(f, g);
  for (std::size_t i = 0; i < plain.samples().size(); ++i)
    CHECK(std::abs(plain.samples()[i] - prod.samples()[i]) <= 1e-12);

  // Single mode: (e^{2 pi i x})' (e^{2 pi i x}) = 2 pi i e^{4 pi i x}.
  const WeightedSequence mode = WeightedSequence::delta(1, Point{1});
  const TorusFunction em = fromFourier(mode, grid);
  const TorusFunction dd = physicalDerivativeProduct(em, em, MultiIndex{1}, MultiIndex{0}, 1, 1);
  Box(Point{0}, Point{grid.n - 1}).forEach([&](const Point& node) {
    const double th = 4.0 * std::numbers::pi * node[0] / grid.n;
    const Complex want = Complex(0.0, 2.0 * std::numbers::pi) * Complex(std::cos(th), std::sin(th));
    CHECK(std::abs(dd.sample(node) - want) <= 1e-10);
  });

  // Grid has n = 16 nodes: bands summing past the alias-free limit are rejected.
  CHECK_THROWS_AS(physicalDerivativeProduct(f, g, MultiIndex{0}, MultiIndex{0}, 5, 5), std::invalid_argument);
}

TEST_CASE("bridge: derivative products") {
  for (int d : {1, 2}) {
    const int bandK = d == 1 ? 4 : 2;
    const TorusGrid grid = TorusGrid::forBandSum(d, 2 * bandK);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const TorusFunction f = randomBandLimited(d, bandK, grid, 400 + seed);
      const TorusFunction g = randomBandLimited(d, bandK, grid, 500 + seed);
      MultiIndex a = MultiIndex::zero(d);
      MultiIndex b = MultiIndex::zero(d);
      a[0] = static_cast<int>(seed % 3);
      b[d - 1] = static_cast<int>((seed + 1) % 3);
      const Tensor t = Tensor::convolutionMonomial(a, b);
      const Report rep = bridgeCheck(t, f, g, bandK, bandK);
      CHECK(rep.verdict() == "pass");
    }
  }
}

TEST_CASE("bridge: multiplication") {
  const TorusGrid grid = TorusGrid::forBandSum(1, 9);
  const TorusFunction f = randomBandLimited(1, 4, grid, 601);
  const TorusFunction g = randomBandLimited(1, 4, grid, 602);

  // vhat = delta_0: multiplication by one, trivially exact.
  const Tensor one = Tensor::multiplication(WeightedSequence::deltaAtOrigin(1));
  CHECK(bridgeCheck(one, f, g, 4, 4).verdict() == "pass");

  const Tensor tv = Tensor::multiplication(oracle::randomSequence(1, 1, 603));
  const Report rep = bridgeCheck(tv, f, g, 4, 4);
  CHECK(rep.verdict() == "pass");
  CHECK(rep.doc["residual"].get<double>() <= rep.doc["threshold"].get<double>());
}

TEST_CASE("bridge: variable coefficients equal V F' G on the grid") {
  const TorusGrid grid = TorusGrid::forBandSum(1, 9);
  const TorusFunction f = randomBandLimited(1, 4, grid, 701);
  const TorusFunction g = randomBandLimited(1, 4, grid, 702);
  const WeightedSequence vhat = oracle::randomSequence(1, 1, 703);

  const Tensor t = Tensor::variableCoefficient(vhat, makeMonomialSymbol(MultiIndex{1}, MultiIndex{0}));
  CHECK(bridgeCheck(t, f, g, 4, 4).verdict() == "pass");

  // Direct grid computation of V . F' . G against the Fourier-side output.
  const TorusFunction v = fromFourier(vhat, grid);
  const TorusFunction fp = physicalDerivativeProduct(f, g, MultiIndex{1}, MultiIndex{0}, 4, 4);
  const TorusFunction phys = TorusFunction::pointwiseProduct(v, fp);
  const WeightedSequence lhs = apply(t, toFourier(f, 4), toFourier(g, 4), 9);
  const WeightedSequence rhs = toFourier(phys, 9);
  Box::cube(1, 9).forEach([&](const Point& j) { CHECK(std::abs(lhs.at(j) - rhs.at(j)) <= 1e-10); });

  // An inadequate grid is rejected with the required size in the message.
  const TorusGrid tiny = TorusGrid{1, 8};
  const TorusFunction ftiny = randomBandLimited(1, 2, tiny, 704);
  const TorusFunction gtiny = randomBandLimited(1, 2, tiny, 705);
  CHECK_THROWS_WITH_AS(bridgeCheck(Tensor::multiplication(oracle::randomSequence(1, 2, 706)), ftiny, gtiny, 2, 2),
                       doctest::Contains("need n >="), std::invalid_argument);
}

TEST_CASE("Parseval under the grid quadrature") {
  for (int d : {1, 2}) {
    const int bandK = d == 1 ? 5 : 3;
    const TorusGrid grid = TorusGrid::forBandSum(d, 2 * bandK);
    const WeightedSequence coeffs = oracle::randomSequence(d, bandK, 801 + static_cast<std::uint64_t>(d));
    const TorusFunction f = fromFourier(coeffs, grid);
    CHECK(approxRel(gridL2Norm(f), weightedNorm(coeffs, {0.0}, Exponent::finite(2.0))));
  }
}

TEST_CASE("coefficient-side and grid-side Sobolev norms agree") {
  const TorusGrid grid = TorusGrid::forBandSum(1, 10);
  const int bandK = 5;
  const WeightedSequence coeffs = oracle::randomSequence(1, bandK, 901);
  const TorusFunction f = fromFourier(coeffs, grid);
  for (double s : {-1.0, 0.0, 1.5}) {
    CHECK(approxRel(gridSobolevNorm(f, s), weightedNorm(coeffs, {s}, Exponent::finite(2.0))));
  }
}
