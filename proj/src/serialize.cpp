#include "dbo/serialize.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace dbo {

namespace {

Point pointFromArray(const ojson& a, int d, std::size_t offset) {
  Point p(d);
  for (int m = 0; m < d; ++m) p[m] = a.at(offset + static_cast<std::size_t>(m)).get<int>();
  return p;
}

MultiIndex multiIndexFromJson(const ojson& a, int d) {
  if (!a.is_array() || static_cast<int>(a.size()) != d)
    throw std::invalid_argument("multi-index must be an array of length d");
  Point p(d);
  for (int m = 0; m < d; ++m) p[m] = a.at(static_cast<std::size_t>(m)).get<int>();
  return p;
}

int requireDim(const ojson& j) {
  const int d = j.at("d").get<int>();
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("dimension out of range");
  return d;
}

}  // namespace

ojson sequenceToJson(const WeightedSequence& f) {
  ojson j;
  j["d"] = f.dim();
  ojson entries = ojson::array();
  f.forEachStored([&](const Point& k, Complex v) {
    if (v == Complex(0.0, 0.0)) return;
    ojson e = ojson::array();
    for (int m = 0; m < f.dim(); ++m) e.push_back(k[m]);
    e.push_back(v.real());
    e.push_back(v.imag());
    entries.push_back(e);
  });
  j["entries"] = entries;
  return j;
}

WeightedSequence sequenceFromJson(const ojson& j) {
  const int d = requireDim(j);
  std::vector<std::pair<Point, Complex>> entries;
  for (const ojson& e : j.at("entries")) {
    if (!e.is_array() || e.size() != static_cast<std::size_t>(d) + 2)
      throw std::invalid_argument("sequence entry must be [c1..cd, re, im]");
    const Point k = pointFromArray(e, d, 0);
    const Complex v(e.at(static_cast<std::size_t>(d)).get<double>(),
                    e.at(static_cast<std::size_t>(d) + 1).get<double>());
    entries.emplace_back(k, v);
  }
  return WeightedSequence::fromEntries(d, entries);
}

SymbolPtr symbolFromJson(const ojson& j, int d) {
  const std::string name = j.at("name").get<std::string>();
  if (name == "constant") {
    const double re = j.value("re", 1.0);
    const double im = j.value("im", 0.0);
    return makeConstantSymbol(d, Complex(re, im));
  }
  if (name == "monomial") {
    return makeMonomialSymbol(multiIndexFromJson(j.at("a"), d), multiIndexFromJson(j.at("b"), d));
  }
  if (name == "bracket_power") return makeBracketPowerSymbol(d, j.at("omega").get<double>());
  if (name == "bracket_sum_power") return makeBracketSumPowerSymbol(d, j.at("omega").get<double>());
  if (name == "gaussian")
    return makeGaussianSymbol(d, j.value("sigma", 1.0), j.value("omega", 0.0));
  throw std::invalid_argument("unknown symbol name: " + name);
}

namespace {

Matrix matrixFromJson(const ojson& j, int d) {
  std::vector<std::pair<std::pair<Point, Point>, Complex>> entries;
  for (const ojson& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 2 * static_cast<std::size_t>(d) + 2)
      throw std::invalid_argument("matrix entry must be [j1..jd, k1..kd, re, im]");
    const Point jj = pointFromArray(e, d, 0);
    const Point kk = pointFromArray(e, d, static_cast<std::size_t>(d));
    const Complex v(e.at(2 * static_cast<std::size_t>(d)).get<double>(),
                    e.at(2 * static_cast<std::size_t>(d) + 1).get<double>());
    entries.emplace_back(std::make_pair(jj, kk), v);
  }
  return Matrix::fromEntries(d, entries, j.value("order", 0.0), j.value("decayM", 0.0));
}

}  // namespace

Tensor tensorFromJson(const ojson& j) {
  const int d = requireDim(j);
  const std::string family = j.at("family").get<std::string>();
  const ojson& params = j.at("params");

  if (family == "dense") {
    const int radius = params.at("radius").get<int>();
    std::vector<std::pair<std::array<Point, 3>, Complex>> entries;
    for (const ojson& e : params.at("entries")) {
      if (!e.is_array() || e.size() != 3 * static_cast<std::size_t>(d) + 2)
        throw std::invalid_argument("dense tensor entry must be [j.., k.., l.., re, im]");
      std::array<Point, 3> idx = {pointFromArray(e, d, 0), pointFromArray(e, d, static_cast<std::size_t>(d)),
                                  pointFromArray(e, d, 2 * static_cast<std::size_t>(d))};
      const Complex v(e.at(3 * static_cast<std::size_t>(d)).get<double>(),
                      e.at(3 * static_cast<std::size_t>(d) + 1).get<double>());
      entries.emplace_back(idx, v);
    }
    return Tensor::dense(d, radius, [entries](const Point& jj, const Point& kk, const Point& ll) {
      Complex acc(0.0, 0.0);
      for (const auto& [idx, v] : entries)
        if (idx[0] == jj && idx[1] == kk && idx[2] == ll) acc += v;
      return acc;
    });
  }
  if (family == "diagonal_cutoff") {
    return Tensor::diagonalCutoff(sequenceFromJson(params.at("theta")), params.at("M").get<int>());
  }
  if (family == "convolution") {
    const std::string mode = params.value("mode", "phi_kl");
    if (mode == "monomial")
      return Tensor::convolutionMonomial(multiIndexFromJson(params.at("a"), d),
                                         multiIndexFromJson(params.at("b"), d));
    SymbolPtr phi = symbolFromJson(params.at("phi"), d);
    if (mode == "phi_kl") return Tensor::convolutionPhiKL(phi);
    if (mode == "phi_diff") return Tensor::convolutionPhiDiff(phi);
    throw std::invalid_argument("unknown convolution mode: " + mode);
  }
  if (family == "multiplication") {
    return Tensor::multiplication(sequenceFromJson(params.at("vhat")));
  }
  if (family == "variable_coefficient") {
    return Tensor::variableCoefficient(sequenceFromJson(params.at("vhat")), symbolFromJson(params.at("phi"), d));
  }
  if (family == "separable") {
    return Tensor::separable(matrixFromJson(params.at("sigma1"), d), matrixFromJson(params.at("sigma2"), d));
  }
  throw std::invalid_argument("unknown tensor family: " + family);
}

}  // namespace dbo
