#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "dbo/lattice.hpp"
#include "dbo/sequence.hpp"

namespace dbo {

/// Symbol function Phi : R^d x R^d -> C with a declared order, i.e. the decay
/// rate in <|x| + |y|> that Phi and its derivatives are expected to follow.
class Symbol {
 public:
  virtual ~Symbol() = default;

  virtual Complex eval(std::span<const double> x, std::span<const double> y) const = 0;

  /// Exact partial derivative d_x^a d_y^b Phi when a closed form is wired up;
  /// nullopt otherwise. a, b must be componentwise nonnegative.
  virtual std::optional<Complex> partial(const MultiIndex& a, const MultiIndex& b,
                                         std::span<const double> x, std::span<const double> y) const {
    (void)a;
    (void)b;
    (void)x;
    (void)y;
    return std::nullopt;
  }

  virtual double order() const = 0;
  virtual std::string name() const = 0;
  int dim() const { return d_; }

 protected:
  explicit Symbol(int d) : d_(d) {}
  int d_;
};

using SymbolPtr = std::shared_ptr<const Symbol>;

Complex evalSymbol(const Symbol& phi, const Point& x, const Point& y);

/// Phi == c. Order 0.
SymbolPtr makeConstantSymbol(int d, Complex c);

/// Phi(x, y) = prod_m (2 pi i x_m)^{a_m} (2 pi i y_m)^{b_m}; a, b >= 0.
/// Order |a| + |b|. Exact derivatives of all orders.
SymbolPtr makeMonomialSymbol(const MultiIndex& a, const MultiIndex& b);

/// Phi(x, y) = (1 + |x|^2 + |y|^2)^{omega/2}, the smooth radial bracket power.
/// Exact first-order derivatives.
SymbolPtr makeBracketPowerSymbol(int d, double omega);

/// Phi(x, y) = <|x| + |y|>^omega. Same decay as the radial version but with a
/// kink along the axes, so its iterated differences gain only one order there.
SymbolPtr makeBracketSumPowerSymbol(int d, double omega);

/// Phi(x, y) = exp(-(|x|^2 + |y|^2) / sigma^2). Satisfies any negative order;
/// the declared order is a label for scan parameters.
SymbolPtr makeGaussianSymbol(int d, double sigma, double declaredOrder);

/// For monomial symbols, the exponent pair (a, b); nullopt otherwise.
std::optional<std::pair<MultiIndex, MultiIndex>> monomialExponents(const Symbol& phi);

}  // namespace dbo
