#include "dbo/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dbo/rng.hpp"

namespace dbo {

namespace {

WeightedSequence normalized(const WeightedSequence& f, Exponent p, WeightParams w) {
  const double n = weightedNorm(f, w, p);
  if (n == 0.0) throw std::logic_error("cannot normalize the zero sequence");
  return scaled(f, Complex(1.0 / n, 0.0));
}

WeightedSequence gaussianOnCube(int d, int radius, Rng& rng) {
  return WeightedSequence::build(Box::cube(d, radius), [&](const Point&) { return rng.gaussianComplex(); });
}

WeightedSequence phasePattern(int d, int radius, Rng& rng) {
  return WeightedSequence::build(Box::cube(d, radius), [&](const Point&) {
    const double th = 2.0 * std::numbers::pi * rng.uniform01();
    return Complex(std::cos(th), std::sin(th));
  });
}

}  // namespace

WeightedSequence sampleUnitSequence(int d, int radius, Exponent p, WeightParams w, std::uint64_t seed,
                                    std::uint64_t index) {
  Rng rng = Rng::forSample(seed, index);
  return normalized(gaussianOnCube(d, radius, rng), p, w);
}

std::vector<std::pair<WeightedSequence, WeightedSequence>> sampleUnitPairs(int d, int radius, Exponent p,
                                                                           WeightParams wp, Exponent q,
                                                                           WeightParams wq, int samples,
                                                                           std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::vector<std::pair<WeightedSequence, WeightedSequence>> out;
  out.reserve(static_cast<std::size_t>(samples));

  auto delta = [&](const Point& at) { return WeightedSequence::delta(d, at); };

  int produced = 0;
  auto push = [&](WeightedSequence f, WeightedSequence g) {
    if (produced >= samples) return;
    out.emplace_back(normalized(f, p, wp), normalized(g, q, wq));
    ++produced;
  };

  const Point origin = Point::zero(d);
  Point edge = Point::zero(d);
  edge[0] = std::max(1, radius / 2);

  push(delta(origin), delta(origin));
  push(delta(edge), delta(edge));
  push(delta(edge), delta(-edge));
  {
    Rng rng = Rng::forSample(seed, 0xF0F0F0F0ULL);
    WeightedSequence f = phasePattern(d, radius, rng);
    WeightedSequence g = phasePattern(d, radius, rng);
    push(f, g);
  }

  for (std::uint64_t i = 0; produced < samples; ++i) {
    Rng rng = Rng::forSample(seed, i);
    WeightedSequence f = gaussianOnCube(d, radius, rng);
    WeightedSequence g = gaussianOnCube(d, radius, rng);
    push(f, g);
  }
  return out;
}

}  // namespace dbo
