#include "dbo/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace dbo {

class TensorImpl {
 public:
  virtual ~TensorImpl() = default;
  virtual Complex eval(const Point& j, const Point& k, const Point& l) const = 0;
  virtual Support support() const = 0;
  virtual std::string family() const = 0;
  virtual double evalMag(const Point& j, const Point& k, const Point& l) const { return std::abs(eval(j, k, l)); }
  int dim() const { return d_; }

 protected:
  explicit TensorImpl(int d) : d_(d) {}
  int d_;
};

namespace {

Point boxPointAt(const Box& b, long long idx) {
  Point p(b.dim());
  for (int m = b.dim() - 1; m >= 0; --m) {
    const long long w = static_cast<long long>(b.hi[m]) - b.lo[m] + 1;
    p[m] = static_cast<int>(b.lo[m] + idx % w);
    idx /= w;
  }
  return p;
}

long long binomial(int n, int i) {
  long long r = 1;
  for (int t = 1; t <= i; ++t) r = r * (n - t + 1) / t;
  return r;
}

// ---------------------------------------------------------------------------

class DenseTensor final : public TensorImpl {
 public:
  DenseTensor(int d, int radius, const std::function<Complex(const Point&, const Point&, const Point&)>& gen)
      : TensorImpl(d), cube_(Box::cube(d, radius)), radius_(radius) {
    const long long v = cube_.volume();
    vals_.assign(static_cast<std::size_t>(v * v * v), Complex(0.0, 0.0));
    cube_.forEach([&](const Point& j) {
      cube_.forEach([&](const Point& k) {
        cube_.forEach([&](const Point& l) { vals_[flat(j, k, l)] = gen(j, k, l); });
      });
    });
  }

  Complex eval(const Point& j, const Point& k, const Point& l) const override {
    if (!cube_.contains(j) || !cube_.contains(k) || !cube_.contains(l)) return {0.0, 0.0};
    return vals_[flat(j, k, l)];
  }

  Support support() const override {
    Support s;
    s.kind = Support::Kind::Dense;
    s.cubeRadius = radius_;
    s.exact = true;
    return s;
  }

  std::string family() const override { return "dense"; }

 private:
  std::size_t flat(const Point& j, const Point& k, const Point& l) const {
    const long long v = cube_.volume();
    return static_cast<std::size_t>((cube_.linearIndex(j) * v + cube_.linearIndex(k)) * v + cube_.linearIndex(l));
  }
  Box cube_;
  int radius_;
  std::vector<Complex> vals_;
};

class DiagonalCutoffTensor final : public TensorImpl {
 public:
  DiagonalCutoffTensor(const WeightedSequence& theta, int cutoffM)
      : TensorImpl(theta.dim()), theta_(theta), m_(cutoffM) {
    if (cutoffM < 0) throw std::invalid_argument("diagonal cutoff M must be nonnegative");
  }

  Complex eval(const Point& j, const Point& k, const Point& l) const override {
    if (!(j == k) || !(j == l)) return {0.0, 0.0};
    // |j| + |k| + |l| = 3 |j| <= M  <=>  9 |j|^2 <= M^2.
    if (9 * j.normSqr() > static_cast<long long>(m_) * m_) return {0.0, 0.0};
    return theta_.at(j);
  }

  Support support() const override {
    Support s;
    s.kind = Support::Kind::DiagBand;
    s.w2 = 0;
    s.w3 = 0;
    s.cubeRadius = m_ / 3;
    s.exact = true;
    return s;
  }

  std::string family() const override { return "diagonal_cutoff"; }

 private:
  WeightedSequence theta_;
  int m_;
};

enum class ConvMode { PhiKL, PhiDiff, Monomial };

class ConvolutionTensor final : public TensorImpl {
 public:
  ConvolutionTensor(SymbolPtr phi, ConvMode mode, MultiIndex a, MultiIndex b)
      : TensorImpl(phi->dim()), phi_(std::move(phi)), mode_(mode), a_(a), b_(b) {}

  Complex eval(const Point& j, const Point& k, const Point& l) const override {
    if (!(j == k + l)) return {0.0, 0.0};
    if (mode_ == ConvMode::PhiDiff) return evalSymbol(*phi_, j - k, j - l);
    return evalSymbol(*phi_, k, l);
  }

  Support support() const override {
    Support s;
    s.kind = Support::Kind::SumBand;
    s.sumSlot = 1;
    s.sumWidth = 0;
    s.exact = true;
    return s;
  }

  std::string family() const override { return "convolution"; }

  ConvMode mode() const { return mode_; }
  SymbolPtr phi() const { return phi_; }
  const MultiIndex& a() const { return a_; }
  const MultiIndex& b() const { return b_; }

 private:
  SymbolPtr phi_;
  ConvMode mode_;
  MultiIndex a_, b_;
};

class MultiplicationTensor final : public TensorImpl {
 public:
  explicit MultiplicationTensor(const WeightedSequence& vhat) : TensorImpl(vhat.dim()), vhat_(vhat) {}

  Complex eval(const Point& j, const Point& k, const Point& l) const override { return vhat_.at(j - k - l); }

  Support support() const override {
    Support s;
    s.kind = Support::Kind::SumBand;
    s.sumSlot = 1;
    s.sumWidth = vhat_.support().supRadius();
    s.exact = true;
    return s;
  }

  std::string family() const override { return "multiplication"; }
  const WeightedSequence& vhat() const { return vhat_; }

 private:
  WeightedSequence vhat_;
};

class VariableCoefficientTensor final : public TensorImpl {
 public:
  VariableCoefficientTensor(const WeightedSequence& vhat, SymbolPtr phi)
      : TensorImpl(vhat.dim()), vhat_(vhat), phi_(std::move(phi)) {
    if (vhat_.dim() != phi_->dim()) throw std::invalid_argument("variable coefficient: dimension mismatch");
  }

  Complex eval(const Point& j, const Point& k, const Point& l) const override {
    const Complex v = vhat_.at(j - k - l);
    if (v == Complex(0.0, 0.0)) return v;
    return v * evalSymbol(*phi_, k, l);
  }

  Support support() const override {
    Support s;
    s.kind = Support::Kind::SumBand;
    s.sumSlot = 1;
    s.sumWidth = vhat_.support().supRadius();
    s.exact = true;
    return s;
  }

  std::string family() const override { return "variable_coefficient"; }
  const WeightedSequence& vhat() const { return vhat_; }
  SymbolPtr phi() const { return phi_; }

 private:
  WeightedSequence vhat_;
  SymbolPtr phi_;
};

class SeparableTensor final : public TensorImpl {
 public:
  SeparableTensor(Matrix s1, Matrix s2) : TensorImpl(s1.dim()), s1_(std::move(s1)), s2_(std::move(s2)) {
    if (s1_.dim() != s2_.dim()) throw std::invalid_argument("separable tensor: dimension mismatch");
  }

  Complex eval(const Point& j, const Point& k, const Point& l) const override { return s1_(j, k) * s2_(j, l); }

  Support support() const override {
    Support s;
    if (s1_.band() && s2_.band()) {
      s.kind = Support::Kind::DiagBand;
      s.w2 = *s1_.band();
      s.w3 = *s2_.band();
      s.exact = true;
    } else {
      s.kind = Support::Kind::Dense;
      s.exact = false;
    }
    if (s1_.cubeRadius() && s2_.cubeRadius()) s.cubeRadius = std::max(*s1_.cubeRadius(), *s2_.cubeRadius());
    return s;
  }

  std::string family() const override { return "separable"; }

  std::optional<double> claimedDecayN() const {
    const double m = std::min(s1_.decayM(), s2_.decayM());
    if (m <= 0.0) return std::nullopt;
    return m / 2.0;
  }

 private:
  Matrix s1_, s2_;
};

class LinearCombinationTensor final : public TensorImpl {
 public:
  LinearCombinationTensor(int d, std::vector<std::pair<Complex, Tensor>> terms)
      : TensorImpl(d), terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("linear combination needs at least one term");
    for (const auto& [c, t] : terms_)
      if (t.dim() != d_) throw std::invalid_argument("linear combination: dimension mismatch");
  }

  Complex eval(const Point& j, const Point& k, const Point& l) const override {
    Complex acc(0.0, 0.0);
    for (const auto& [c, t] : terms_) acc += c * t(j, k, l);
    return acc;
  }

  double evalMag(const Point& j, const Point& k, const Point& l) const override {
    double acc = 0.0;
    for (const auto& [c, t] : terms_) acc += std::abs(c) * t.magnitudeAt(j, k, l);
    return acc;
  }

  Support support() const override {
    // Union of the addend supports, described conservatively.
    Support s = terms_.front().second.support();
    bool allSumBandSameSlot = s.kind == Support::Kind::SumBand;
    bool allExact = s.exact;
    int width = s.sumWidth;
    std::optional<int> cube = s.cubeRadius;
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      const Support o = terms_[i].second.support();
      allExact = allExact && o.exact;
      allSumBandSameSlot =
          allSumBandSameSlot && o.kind == Support::Kind::SumBand && o.sumSlot == s.sumSlot;
      if (o.kind == Support::Kind::SumBand) width = std::max(width, o.sumWidth);
      if (cube && o.cubeRadius)
        cube = std::max(*cube, *o.cubeRadius);
      else
        cube.reset();
    }
    Support out;
    if (allSumBandSameSlot) {
      out.kind = Support::Kind::SumBand;
      out.sumSlot = s.sumSlot;
      out.sumWidth = width;
      out.exact = allExact;
    } else {
      out.kind = Support::Kind::Dense;
      out.exact = false;
    }
    out.cubeRadius = cube;
    return out;
  }

  std::string family() const override { return "linear_combination"; }

 private:
  std::vector<std::pair<Complex, Tensor>> terms_;
};

class ShiftedTensor final : public TensorImpl {
 public:
  ShiftedTensor(std::shared_ptr<const TensorImpl> parent, int slot, int axis, int sign)
      : TensorImpl(parent->dim()), parent_(std::move(parent)), slot_(slot), step_(Point::zero(d_)) {
    if (slot != 2 && slot != 3) throw std::invalid_argument("shift slot must be 2 or 3");
    if (axis < 0 || axis >= d_) throw std::invalid_argument("shift axis out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("shift sign must be +-1");
    step_[axis] = sign;
  }

  Complex eval(const Point& j, const Point& k, const Point& l) const override {
    if (slot_ == 2) return parent_->eval(j + step_, k + step_, l);
    return parent_->eval(j + step_, k, l + step_);
  }

  double evalMag(const Point& j, const Point& k, const Point& l) const override {
    if (slot_ == 2) return parent_->evalMag(j + step_, k + step_, l);
    return parent_->evalMag(j + step_, k, l + step_);
  }

  Support support() const override {
    Support s = parent_->support();
    if (s.kind == Support::Kind::DiagBand) {
      if (slot_ == 2)
        s.w3 += 1;  // slot-2 shifts preserve j - k, move j - l
      else
        s.w2 += 1;
    }
    if (s.cubeRadius) s.cubeRadius = *s.cubeRadius + 1;
    return s;
  }

  std::string family() const override { return "shifted"; }

 private:
  std::shared_ptr<const TensorImpl> parent_;
  int slot_;
  Point step_;
};

struct DiffTerm {
  Point u, v;  // slot-2 and slot-3 total offsets
  double coeff;
};

class DifferencedTensor final : public TensorImpl {
 public:
  DifferencedTensor(std::shared_ptr<const TensorImpl> parent, const MultiIndex& alpha, const MultiIndex& beta)
      : TensorImpl(parent->dim()), parent_(std::move(parent)), alpha_(alpha), beta_(beta) {
    if (alpha.dim() != d_ || beta.dim() != d_) throw std::invalid_argument("difference multi-index dimension mismatch");
    terms_.push_back({Point::zero(d_), Point::zero(d_), 1.0});
    for (int m = 0; m < d_; ++m) expandAxis(m, alpha[m], /*slot2=*/true);
    for (int m = 0; m < d_; ++m) expandAxis(m, beta[m], /*slot2=*/false);
  }

  Complex eval(const Point& j, const Point& k, const Point& l) const override {
    Complex acc(0.0, 0.0);
    for (const DiffTerm& t : terms_) acc += t.coeff * parent_->eval(j + t.u + t.v, k + t.u, l + t.v);
    return acc;
  }

  double evalMag(const Point& j, const Point& k, const Point& l) const override {
    double acc = 0.0;
    for (const DiffTerm& t : terms_) acc += std::abs(t.coeff) * parent_->evalMag(j + t.u + t.v, k + t.u, l + t.v);
    return acc;
  }

  Support support() const override {
    Support s = parent_->support();
    const int na = static_cast<int>(alpha_.absSum());
    const int nb = static_cast<int>(beta_.absSum());
    if (s.kind == Support::Kind::DiagBand) {
      s.w2 += nb;  // slot-3 offsets move j - k
      s.w3 += na;  // slot-2 offsets move j - l
    }
    if (s.cubeRadius) s.cubeRadius = *s.cubeRadius + na + nb;
    return s;
  }

  std::string family() const override { return "differenced"; }

 private:
  // Multiplies the current term list by (S - I)^{|t|} on one axis, where S is
  // the slot shift by sign(t) e_m.
  void expandAxis(int axis, int t, bool slot2) {
    const int n = std::abs(t);
    if (n == 0) return;
    const int sgn = t > 0 ? 1 : -1;
    std::vector<DiffTerm> out;
    out.reserve(terms_.size() * static_cast<std::size_t>(n + 1));
    for (const DiffTerm& base : terms_) {
      for (int i = 0; i <= n; ++i) {
        DiffTerm nt = base;
        const double sign = ((n - i) % 2 == 0) ? 1.0 : -1.0;
        nt.coeff *= sign * static_cast<double>(binomial(n, i));
        if (slot2)
          nt.u[axis] += sgn * i;
        else
          nt.v[axis] += sgn * i;
        out.push_back(nt);
      }
    }
    terms_.swap(out);
  }

  std::shared_ptr<const TensorImpl> parent_;
  MultiIndex alpha_, beta_;
  std::vector<DiffTerm> terms_;
};

class TransposedTensor final : public TensorImpl {
 public:
  TransposedTensor(std::shared_ptr<const TensorImpl> parent, int which)
      : TensorImpl(parent->dim()), parent_(std::move(parent)), which_(which) {
    if (which != 1 && which != 2) throw std::invalid_argument("transpose selector must be 1 or 2");
  }

  Complex eval(const Point& j, const Point& k, const Point& l) const override {
    if (which_ == 1) return parent_->eval(k, j, l);
    return parent_->eval(l, k, j);
  }

  double evalMag(const Point& j, const Point& k, const Point& l) const override {
    if (which_ == 1) return parent_->evalMag(k, j, l);
    return parent_->evalMag(l, k, j);
  }

  Support support() const override {
    Support s = parent_->support();
    if (s.kind == Support::Kind::DiagBand) {
      // Triangle inequality closes the band around the new first slot.
      if (which_ == 1)
        s = withBands(s, s.w2, s.w2 + s.w3);
      else
        s = withBands(s, s.w2 + s.w3, s.w3);
    } else if (s.kind == Support::Kind::SumBand) {
      s.sumSlot = permuteSlot(s.sumSlot);
    }
    return s;
  }

  std::string family() const override { return "transposed"; }

 private:
  static Support withBands(Support s, int w2, int w3) {
    s.w2 = w2;
    s.w3 = w3;
    return s;
  }
  int permuteSlot(int slot) const {
    if (which_ == 1) return slot == 1 ? 2 : (slot == 2 ? 1 : 3);
    return slot == 1 ? 3 : (slot == 3 ? 1 : 2);
  }
  std::shared_ptr<const TensorImpl> parent_;
  int which_;
};

void checkDims(const Tensor& t, const Point& j, const Point& k, const Point& l) {
  if (j.dim() != t.dim() || k.dim() != t.dim() || l.dim() != t.dim())
    throw std::invalid_argument("tensor evaluation: dimension mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------

Matrix Matrix::fromEvaluator(int d, std::function<Complex(const Point&, const Point&)> eval, double order,
                             double decayM, std::optional<int> band, std::optional<int> cubeRadius) {
  Matrix m;
  m.d_ = d;
  m.eval_ = std::move(eval);
  m.order_ = order;
  m.decayM_ = decayM;
  m.band_ = band;
  m.cubeRadius_ = cubeRadius;
  return m;
}

Matrix Matrix::identity(int d) {
  return fromEvaluator(
      d, [](const Point& j, const Point& k) { return j == k ? Complex(1.0, 0.0) : Complex(0.0, 0.0); },
      /*order=*/0.0, /*decayM=*/0.0, /*band=*/0);
}

Matrix Matrix::fromEntries(int d, std::span<const std::pair<std::pair<Point, Point>, Complex>> entries, double order,
                           double decayM) {
  auto table = std::make_shared<std::vector<std::pair<std::pair<Point, Point>, Complex>>>(entries.begin(),
                                                                                          entries.end());
  int band = 0;
  int cube = 0;
  for (const auto& [jk, v] : *table) {
    if (jk.first.dim() != d || jk.second.dim() != d) throw std::invalid_argument("matrix entry dimension mismatch");
    band = std::max(band, (jk.first - jk.second).normSup());
    cube = std::max({cube, jk.first.normSup(), jk.second.normSup()});
  }
  return fromEvaluator(
      d,
      [table](const Point& j, const Point& k) {
        Complex acc(0.0, 0.0);
        for (const auto& [jk, v] : *table)
          if (jk.first == j && jk.second == k) acc += v;
        return acc;
      },
      order, decayM, band, cube);
}

// ---------------------------------------------------------------------------

Complex Tensor::operator()(const Point& j, const Point& k, const Point& l) const {
  checkDims(*this, j, k, l);
  return impl_->eval(j, k, l);
}

int Tensor::dim() const { return impl_->dim(); }
Support Tensor::support() const { return impl_->support(); }
std::string Tensor::family() const { return impl_->family(); }

double Tensor::magnitudeAt(const Point& j, const Point& k, const Point& l) const {
  checkDims(*this, j, k, l);
  return impl_->evalMag(j, k, l);
}

Tensor Tensor::dense(int d, int radius, const std::function<Complex(const Point&, const Point&, const Point&)>& gen) {
  return Tensor(std::make_shared<DenseTensor>(d, radius, gen));
}

Tensor Tensor::diagonalCutoff(const WeightedSequence& theta, int cutoffM) {
  return Tensor(std::make_shared<DiagonalCutoffTensor>(theta, cutoffM));
}

Tensor Tensor::convolutionPhiKL(SymbolPtr phi) {
  const int d = phi->dim();
  return Tensor(std::make_shared<ConvolutionTensor>(std::move(phi), ConvMode::PhiKL, MultiIndex::zero(d),
                                                    MultiIndex::zero(d)));
}

Tensor Tensor::convolutionPhiDiff(SymbolPtr phi) {
  const int d = phi->dim();
  return Tensor(std::make_shared<ConvolutionTensor>(std::move(phi), ConvMode::PhiDiff, MultiIndex::zero(d),
                                                    MultiIndex::zero(d)));
}

Tensor Tensor::convolutionMonomial(const MultiIndex& a, const MultiIndex& b) {
  return Tensor(std::make_shared<ConvolutionTensor>(makeMonomialSymbol(a, b), ConvMode::Monomial, a, b));
}

bool TorusCoefficient::decayTagHolds() const {
  bool ok = true;
  coeffs.forEachStored([&](const Point& n, Complex v) {
    if (std::abs(v) > decayC * std::pow(1.0 + static_cast<double>(n.normSqr()), -0.5 * decayK)) ok = false;
  });
  return ok;
}

Tensor Tensor::multiplication(const WeightedSequence& vhat) {
  return Tensor(std::make_shared<MultiplicationTensor>(vhat));
}

Tensor Tensor::multiplication(const TorusCoefficient& v) {
  if (!v.decayTagHolds())
    throw std::invalid_argument("multiplication tensor: stored coefficients break the declared decay tag");
  return multiplication(v.coeffs);
}

Tensor Tensor::variableCoefficient(const WeightedSequence& vhat, SymbolPtr phi) {
  return Tensor(std::make_shared<VariableCoefficientTensor>(vhat, std::move(phi)));
}

Tensor Tensor::separable(const Matrix& sigma1, const Matrix& sigma2) {
  return Tensor(std::make_shared<SeparableTensor>(sigma1, sigma2));
}

Tensor Tensor::linearCombination(std::span<const std::pair<Complex, Tensor>> terms) {
  if (terms.empty()) throw std::invalid_argument("linear combination needs at least one term");
  std::vector<std::pair<Complex, Tensor>> ts(terms.begin(), terms.end());
  return Tensor(std::make_shared<LinearCombinationTensor>(ts.front().second.dim(), std::move(ts)));
}

Tensor Tensor::shifted(int slot, int axis, int sign) const {
  return Tensor(std::make_shared<ShiftedTensor>(impl_, slot, axis, sign));
}

Tensor Tensor::difference(const MultiIndex& alpha, const MultiIndex& beta) const {
  if (alpha.isZero() && beta.isZero()) return *this;
  return Tensor(std::make_shared<DifferencedTensor>(impl_, alpha, beta));
}

Tensor Tensor::transposed(int which) const { return Tensor(std::make_shared<TransposedTensor>(impl_, which)); }

const WeightedSequence* Tensor::vhat() const {
  if (const auto* m = dynamic_cast<const MultiplicationTensor*>(impl_.get())) return &m->vhat();
  if (const auto* v = dynamic_cast<const VariableCoefficientTensor*>(impl_.get())) return &v->vhat();
  return nullptr;
}

SymbolPtr Tensor::phi() const {
  if (const auto* c = dynamic_cast<const ConvolutionTensor*>(impl_.get())) return c->phi();
  if (const auto* v = dynamic_cast<const VariableCoefficientTensor*>(impl_.get())) return v->phi();
  return nullptr;
}

const MultiIndex* Tensor::monomialA() const {
  if (const auto* c = dynamic_cast<const ConvolutionTensor*>(impl_.get()))
    if (c->mode() == ConvMode::Monomial) return &c->a();
  return nullptr;
}

const MultiIndex* Tensor::monomialB() const {
  if (const auto* c = dynamic_cast<const ConvolutionTensor*>(impl_.get()))
    if (c->mode() == ConvMode::Monomial) return &c->b();
  return nullptr;
}

std::optional<double> Tensor::claimedDecayN() const {
  if (const auto* s = dynamic_cast<const SeparableTensor*>(impl_.get())) return s->claimedDecayN();
  return std::nullopt;
}

// ---------------------------------------------------------------------------

TripleEnumerator::TripleEnumerator(const Tensor& t, int radius) : t_(t), s_(t.support()), d_(t.dim()), scanR_(radius) {
  if (radius < 0) throw std::invalid_argument("scan radius must be nonnegative");
  effR_ = s_.cubeRadius ? std::min(radius, *s_.cubeRadius) : radius;
  long long c = 1;
  for (int m = 0; m < d_; ++m) c *= 2LL * effR_ + 1;
  primaryCount_ = c;
}

Point TripleEnumerator::primaryPoint(std::int64_t p) const { return boxPointAt(Box::cube(d_, effR_), p); }

void TripleEnumerator::visitPrimary(std::int64_t p,
                                    const std::function<void(const Point&, const Point&, const Point&)>& fn) const {
  const Box cube = Box::cube(d_, effR_);
  const Point prim = primaryPoint(p);
  switch (s_.kind) {
    case Support::Kind::Dense: {
      cube.forEach([&](const Point& k) { cube.forEach([&](const Point& l) { fn(prim, k, l); }); });
      return;
    }
    case Support::Kind::DiagBand: {
      const Box kb = Box::around(prim, s_.w2).intersect(cube);
      const Box lb = Box::around(prim, s_.w3).intersect(cube);
      kb.forEach([&](const Point& k) { lb.forEach([&](const Point& l) { fn(prim, k, l); }); });
      return;
    }
    case Support::Kind::SumBand: {
      const Box offsets = Box::cube(d_, s_.sumWidth);
      cube.forEach([&](const Point& second) {
        offsets.forEach([&](const Point& m) {
          const Point bound = prim + second + m;
          if (!cube.contains(bound)) return;
          // slots: sumSlot holds `bound`, the two free slots hold prim/second
          // in slot order.
          switch (s_.sumSlot) {
            case 1:
              fn(bound, prim, second);
              break;
            case 2:
              fn(prim, bound, second);
              break;
            default:
              fn(prim, second, bound);
              break;
          }
        });
      });
      return;
    }
  }
}

void TripleEnumerator::visitAll(const std::function<void(const Point&, const Point&, const Point&)>& fn) const {
  for (std::int64_t p = 0; p < primaryCount_; ++p) visitPrimary(p, fn);
}

}  // namespace dbo
