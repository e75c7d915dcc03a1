#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace dbo {

inline constexpr int kMaxDim = 8;

/// Point of the integer lattice Z^d. Also used for multi-indices in Z^d,
/// whose entries may be negative.
class Point {
 public:
  Point() = default;
  explicit Point(int dim) : d_(checkDim(dim)) {}
  Point(std::initializer_list<int> cs);

  static Point of(std::span<const int> cs);
  static Point zero(int dim) { return Point(dim); }
  static Point unit(int dim, int axis);
  static Point constant(int dim, int v);

  int dim() const { return d_; }
  int operator[](int axis) const { return c_[static_cast<std::size_t>(axis)]; }
  int& operator[](int axis) { return c_[static_cast<std::size_t>(axis)]; }

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point operator-() const;
  Point& operator+=(const Point& o);

  bool operator==(const Point& o) const;
  std::strong_ordering operator<=>(const Point& o) const;

  /// Euclidean norm |k| = (k_1^2 + ... + k_d^2)^{1/2}.
  double normEuclid() const { return std::sqrt(static_cast<double>(normSqr())); }
  long long normSqr() const;
  int normSup() const;
  /// |alpha| = sum_m |alpha_m|, the order of a multi-index.
  long long absSum() const;
  bool isZero() const;

  std::string str() const;

 private:
  static int checkDim(int d);
  std::array<std::int32_t, kMaxDim> c_{};
  int d_ = 0;
};

/// Multi-indices share the lattice-point representation; their order is absSum().
using MultiIndex = Point;

/// Axis-aligned box [lo, hi] (inclusive per axis). lo > hi on some axis means empty.
struct Box {
  Point lo, hi;

  Box() = default;
  Box(Point lo_, Point hi_) : lo(lo_), hi(hi_) {}

  static Box cube(int dim, int radius);
  static Box around(const Point& center, int radius);
  static Box single(const Point& p) { return Box(p, p); }
  static Box empty(int dim);

  int dim() const { return lo.dim(); }
  bool isEmpty() const;
  bool contains(const Point& p) const;
  long long volume() const;
  long long linearIndex(const Point& p) const;

  Box intersect(const Box& o) const;
  Box hull(const Box& o) const;
  Box inflate(int by) const;
  /// Largest sup-norm over the corners, i.e. the radius of the smallest
  /// origin-centered cube containing the box.
  int supRadius() const;

  /// Visits every point, last axis fastest (canonical order).
  void forEach(const std::function<void(const Point&)>& fn) const;

  bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

}  // namespace dbo
