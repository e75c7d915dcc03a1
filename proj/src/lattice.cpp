#include "dbo/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dbo {

int Point::checkDim(int d) {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("lattice dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  return d;
}

Point::Point(std::initializer_list<int> cs) : d_(checkDim(static_cast<int>(cs.size()))) {
  int m = 0;
  for (int v : cs) c_[static_cast<std::size_t>(m++)] = v;
}

Point Point::of(std::span<const int> cs) {
  Point p(static_cast<int>(cs.size()));
  for (int m = 0; m < p.d_; ++m) p.c_[static_cast<std::size_t>(m)] = cs[static_cast<std::size_t>(m)];
  return p;
}

Point Point::unit(int dim, int axis) {
  Point p(dim);
  if (axis < 0 || axis >= dim) throw std::invalid_argument("axis out of range");
  p[axis] = 1;
  return p;
}

Point Point::constant(int dim, int v) {
  Point p(dim);
  for (int m = 0; m < dim; ++m) p[m] = v;
  return p;
}

Point Point::operator+(const Point& o) const {
  Point r = *this;
  for (int m = 0; m < d_; ++m) r[m] += o[m];
  return r;
}

Point Point::operator-(const Point& o) const {
  Point r = *this;
  for (int m = 0; m < d_; ++m) r[m] -= o[m];
  return r;
}

Point Point::operator-() const {
  Point r = *this;
  for (int m = 0; m < d_; ++m) r[m] = -r[m];
  return r;
}

Point& Point::operator+=(const Point& o) {
  for (int m = 0; m < d_; ++m) c_[static_cast<std::size_t>(m)] += o[m];
  return *this;
}

bool Point::operator==(const Point& o) const {
  if (d_ != o.d_) return false;
  for (int m = 0; m < d_; ++m)
    if (c_[static_cast<std::size_t>(m)] != o.c_[static_cast<std::size_t>(m)]) return false;
  return true;
}

std::strong_ordering Point::operator<=>(const Point& o) const {
  if (auto c = d_ <=> o.d_; c != 0) return c;
  for (int m = 0; m < d_; ++m)
    if (auto c = c_[static_cast<std::size_t>(m)] <=> o.c_[static_cast<std::size_t>(m)]; c != 0) return c;
  return std::strong_ordering::equal;
}

long long Point::normSqr() const {
  long long s = 0;
  for (int m = 0; m < d_; ++m) {
    long long v = c_[static_cast<std::size_t>(m)];
    s += v * v;
  }
  return s;
}

int Point::normSup() const {
  int s = 0;
  for (int m = 0; m < d_; ++m) s = std::max(s, std::abs(c_[static_cast<std::size_t>(m)]));
  return s;
}

long long Point::absSum() const {
  long long s = 0;
  for (int m = 0; m < d_; ++m) s += std::abs(static_cast<long long>(c_[static_cast<std::size_t>(m)]));
  return s;
}

bool Point::isZero() const {
  for (int m = 0; m < d_; ++m)
    if (c_[static_cast<std::size_t>(m)] != 0) return false;
  return true;
}

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (int m = 0; m < d_; ++m) {
    if (m) os << ',';
    os << c_[static_cast<std::size_t>(m)];
  }
  os << ')';
  return os.str();
}

Box Box::cube(int dim, int radius) {
  return Box(Point::constant(dim, -radius), Point::constant(dim, radius));
}

Box Box::around(const Point& center, int radius) {
  return Box(center - Point::constant(center.dim(), radius), center + Point::constant(center.dim(), radius));
}

Box Box::empty(int dim) {
  Box b;
  b.lo = Point::constant(dim, 1);
  b.hi = Point::constant(dim, 0);
  return b;
}

bool Box::isEmpty() const {
  for (int m = 0; m < dim(); ++m)
    if (lo[m] > hi[m]) return true;
  return false;
}

bool Box::contains(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (int m = 0; m < dim(); ++m)
    if (p[m] < lo[m] || p[m] > hi[m]) return false;
  return true;
}

long long Box::volume() const {
  long long v = 1;
  for (int m = 0; m < dim(); ++m) {
    long long w = static_cast<long long>(hi[m]) - lo[m] + 1;
    if (w <= 0) return 0;
    v *= w;
  }
  return v;
}

long long Box::linearIndex(const Point& p) const {
  long long idx = 0;
  for (int m = 0; m < dim(); ++m) {
    long long w = static_cast<long long>(hi[m]) - lo[m] + 1;
    idx = idx * w + (p[m] - lo[m]);
  }
  return idx;
}

Box Box::intersect(const Box& o) const {
  Box r = *this;
  for (int m = 0; m < dim(); ++m) {
    r.lo[m] = std::max(lo[m], o.lo[m]);
    r.hi[m] = std::min(hi[m], o.hi[m]);
  }
  return r;
}

Box Box::hull(const Box& o) const {
  if (isEmpty()) return o;
  if (o.isEmpty()) return *this;
  Box r = *this;
  for (int m = 0; m < dim(); ++m) {
    r.lo[m] = std::min(lo[m], o.lo[m]);
    r.hi[m] = std::max(hi[m], o.hi[m]);
  }
  return r;
}

Box Box::inflate(int by) const {
  Box r = *this;
  for (int m = 0; m < dim(); ++m) {
    r.lo[m] -= by;
    r.hi[m] += by;
  }
  return r;
}

int Box::supRadius() const {
  if (isEmpty()) return 0;
  int r = 0;
  for (int m = 0; m < dim(); ++m) r = std::max({r, std::abs(lo[m]), std::abs(hi[m])});
  return r;
}

void Box::forEach(const std::function<void(const Point&)>& fn) const {
  if (isEmpty()) return;
  Point p = lo;
  const int d = dim();
  while (true) {
    fn(p);
    int m = d - 1;
    while (m >= 0) {
      if (p[m] < hi[m]) {
        ++p[m];
        break;
      }
      p[m] = lo[m];
      --m;
    }
    if (m < 0) break;
  }
}

}  // namespace dbo
