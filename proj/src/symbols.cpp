#include "dbo/symbols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dbo {

namespace {

double sqrNorm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double absSumNorm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

bool nonnegative(const MultiIndex& a) {
  for (int m = 0; m < a.dim(); ++m)
    if (a[m] < 0) return false;
  return true;
}

class ConstantSymbol final : public Symbol {
 public:
  ConstantSymbol(int d, Complex c) : Symbol(d), c_(c) {}
  Complex eval(std::span<const double>, std::span<const double>) const override { return c_; }
  std::optional<Complex> partial(const MultiIndex& a, const MultiIndex& b, std::span<const double>,
                                 std::span<const double>) const override {
    if (!nonnegative(a) || !nonnegative(b)) return std::nullopt;
    return (a.isZero() && b.isZero()) ? c_ : Complex(0.0, 0.0);
  }
  double order() const override { return 0.0; }
  std::string name() const override { return "constant"; }
  Complex value() const { return c_; }

 private:
  Complex c_;
};

class MonomialSymbol final : public Symbol {
 public:
  MonomialSymbol(const MultiIndex& a, const MultiIndex& b) : Symbol(a.dim()), a_(a), b_(b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("monomial symbol: dimension mismatch");
    if (!nonnegative(a) || !nonnegative(b)) throw std::invalid_argument("monomial symbol needs a, b >= 0");
  }

  Complex eval(std::span<const double> x, std::span<const double> y) const override {
    return derivative(a_, b_, MultiIndex::zero(d_), MultiIndex::zero(d_), x, y);
  }

  std::optional<Complex> partial(const MultiIndex& da, const MultiIndex& db, std::span<const double> x,
                                 std::span<const double> y) const override {
    if (!nonnegative(da) || !nonnegative(db)) return std::nullopt;
    return derivative(a_, b_, da, db, x, y);
  }

  double order() const override { return static_cast<double>(a_.absSum() + b_.absSum()); }
  std::string name() const override { return "monomial"; }
  const MultiIndex& a() const { return a_; }
  const MultiIndex& b() const { return b_; }

 private:
  // d^deriv/dt^deriv of (2 pi i t)^power =
  //   power!/(power-deriv)! (2 pi i)^deriv (2 pi i t)^{power-deriv}.
  static Complex axisFactor(int power, int deriv, double t) {
    if (deriv > power) return {0.0, 0.0};
    double fall = 1.0;
    for (int i = 0; i < deriv; ++i) fall *= static_cast<double>(power - i);
    Complex r(fall, 0.0);
    for (int i = 0; i < deriv; ++i) r *= Complex(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < power - deriv; ++i) r *= Complex(0.0, 2.0 * std::numbers::pi) * t;
    return r;
  }

  static Complex derivative(const MultiIndex& a, const MultiIndex& b, const MultiIndex& da, const MultiIndex& db,
                            std::span<const double> x, std::span<const double> y) {
    Complex r(1.0, 0.0);
    for (int m = 0; m < a.dim(); ++m) {
      r *= axisFactor(a[m], da[m], x[static_cast<std::size_t>(m)]);
      if (r == Complex(0.0, 0.0)) return r;
    }
    for (int m = 0; m < b.dim(); ++m) {
      r *= axisFactor(b[m], db[m], y[static_cast<std::size_t>(m)]);
      if (r == Complex(0.0, 0.0)) return r;
    }
    return r;
  }

  MultiIndex a_, b_;
};

class BracketPowerSymbol final : public Symbol {
 public:
  BracketPowerSymbol(int d, double omega) : Symbol(d), omega_(omega) {}

  Complex eval(std::span<const double> x, std::span<const double> y) const override {
    return {std::pow(1.0 + sqrNorm(x) + sqrNorm(y), 0.5 * omega_), 0.0};
  }

  std::optional<Complex> partial(const MultiIndex& a, const MultiIndex& b, std::span<const double> x,
                                 std::span<const double> y) const override {
    if (!nonnegative(a) || !nonnegative(b)) return std::nullopt;
    const long long ord = a.absSum() + b.absSum();
    if (ord == 0) return eval(x, y);
    if (ord > 1) return std::nullopt;
    const double u = 1.0 + sqrNorm(x) + sqrNorm(y);
    double t = 0.0;
    for (int m = 0; m < d_; ++m) {
      if (a[m] == 1) t = x[static_cast<std::size_t>(m)];
      if (b[m] == 1) t = y[static_cast<std::size_t>(m)];
    }
    return Complex(omega_ * t * std::pow(u, 0.5 * omega_ - 1.0), 0.0);
  }

  double order() const override { return omega_; }
  std::string name() const override { return "bracket_power"; }
  double omega() const { return omega_; }

 private:
  double omega_;
};

class BracketSumPowerSymbol final : public Symbol {
 public:
  BracketSumPowerSymbol(int d, double omega) : Symbol(d), omega_(omega) {}

  Complex eval(std::span<const double> x, std::span<const double> y) const override {
    const double u = absSumNorm(x) + absSumNorm(y);
    return {std::pow(1.0 + u * u, 0.5 * omega_), 0.0};
  }

  double order() const override { return omega_; }
  std::string name() const override { return "bracket_sum_power"; }
  double omega() const { return omega_; }

 private:
  double omega_;
};

class GaussianSymbol final : public Symbol {
 public:
  GaussianSymbol(int d, double sigma, double declaredOrder) : Symbol(d), sigma_(sigma), order_(declaredOrder) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian symbol needs sigma > 0");
  }

  Complex eval(std::span<const double> x, std::span<const double> y) const override {
    return {std::exp(-(sqrNorm(x) + sqrNorm(y)) / (sigma_ * sigma_)), 0.0};
  }

  std::optional<Complex> partial(const MultiIndex& a, const MultiIndex& b, std::span<const double> x,
                                 std::span<const double> y) const override {
    if (!nonnegative(a) || !nonnegative(b)) return std::nullopt;
    const long long ord = a.absSum() + b.absSum();
    if (ord == 0) return eval(x, y);
    if (ord > 1) return std::nullopt;
    double t = 0.0;
    for (int m = 0; m < d_; ++m) {
      if (a[m] == 1) t = x[static_cast<std::size_t>(m)];
      if (b[m] == 1) t = y[static_cast<std::size_t>(m)];
    }
    return eval(x, y) * Complex(-2.0 * t / (sigma_ * sigma_), 0.0);
  }

  double order() const override { return order_; }
  std::string name() const override { return "gaussian"; }
  double sigma() const { return sigma_; }

 private:
  double sigma_;
  double order_;
};

}  // namespace

Complex evalSymbol(const Symbol& phi, const Point& x, const Point& y) {
  double xs[kMaxDim], ys[kMaxDim];
  const int d = phi.dim();
  for (int m = 0; m < d; ++m) {
    xs[m] = static_cast<double>(x[m]);
    ys[m] = static_cast<double>(y[m]);
  }
  return phi.eval(std::span<const double>(xs, static_cast<std::size_t>(d)),
                  std::span<const double>(ys, static_cast<std::size_t>(d)));
}

SymbolPtr makeConstantSymbol(int d, Complex c) { return std::make_shared<ConstantSymbol>(d, c); }

SymbolPtr makeMonomialSymbol(const MultiIndex& a, const MultiIndex& b) {
  return std::make_shared<MonomialSymbol>(a, b);
}

SymbolPtr makeBracketPowerSymbol(int d, double omega) { return std::make_shared<BracketPowerSymbol>(d, omega); }

SymbolPtr makeBracketSumPowerSymbol(int d, double omega) {
  return std::make_shared<BracketSumPowerSymbol>(d, omega);
}

SymbolPtr makeGaussianSymbol(int d, double sigma, double declaredOrder) {
  return std::make_shared<GaussianSymbol>(d, sigma, declaredOrder);
}

std::optional<std::pair<MultiIndex, MultiIndex>> monomialExponents(const Symbol& phi) {
  if (const auto* m = dynamic_cast<const MonomialSymbol*>(&phi)) return std::make_pair(m->a(), m->b());
  return std::nullopt;
}

}  // namespace dbo
