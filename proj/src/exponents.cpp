#include "dbo/exponents.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dbo {

Exponent Exponent::finite(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("exponent must be a positive finite real");
  return Exponent(v, false);
}

Exponent Exponent::inf() { return Exponent(0.0, true); }

Exponent Exponent::parse(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity") return inf();
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("cannot parse exponent: " + s);
  return finite(v);
}

double Exponent::value() const {
  if (inf_) throw std::logic_error("value() called on the infinite exponent");
  return v_;
}

Exponent Exponent::dual() const {
  if (!inAdmissibleRange()) throw std::invalid_argument("dual exponent defined for p in [1, infinity]");
  if (inf_) return finite(1.0);
  if (v_ == 1.0) return inf();
  return finite(v_ / (v_ - 1.0));
}

bool Exponent::operator==(const Exponent& o) const {
  if (inf_ != o.inf_) return false;
  return inf_ || v_ == o.v_;
}

std::string Exponent::str() const {
  if (inf_) return "inf";
  std::ostringstream os;
  os << v_;
  return os.str();
}

HolderTriple holderTriple(Exponent p, Exponent q) {
  if (!p.inAdmissibleRange() || !q.inAdmissibleRange())
    throw std::invalid_argument("Hoelder triple requires p, q in [1, infinity]");
  const double rec = p.recip() + q.recip();
  Exponent r = rec == 0.0 ? Exponent::inf() : Exponent::finite(1.0 / rec);
  return HolderTriple{p, q, r, p.dual(), q.dual()};
}

}  // namespace dbo
