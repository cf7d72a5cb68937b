#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpss/errors.hpp"
#include "gpss/rational.hpp"

namespace gpss {

using Coord = Rat;

// Exact planar point with rational coordinates. Ordered lexicographically on
// (x, y) so that containers of points iterate deterministically.
struct Point {
  Coord x;
  Coord y;

  Point() = default;
  Point(Coord px, Coord py) : x(std::move(px)), y(std::move(py)) {}
  Point(long long px, long long py) : x(px), y(py) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Canonical integer line a*x + b*y + c = 0 with (a,b) != (0,0),
// gcd(|a|,|b|,|c|) = 1 and the first nonzero of (a,b,c) positive. Two distinct
// points determine exactly one LineKey, so line identity is plain equality.
struct LineKey {
  Int a;
  Int b;
  Int c;

  bool operator==(const LineKey& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const LineKey& o) const { return !(*this == o); }
  bool operator<(const LineKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

struct LineKeyHash {
  std::size_t operator()(const LineKey& k) const;
};

// Ordered, duplicate-free point collection; construction sorts and dedups.
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts);

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  bool contains(const Point& p) const;
  bool contains_all(const PointSet& other) const;

  std::vector<Point>::const_iterator begin() const { return pts_.begin(); }
  std::vector<Point>::const_iterator end() const { return pts_.end(); }

  bool operator==(const PointSet& o) const { return pts_ == o.pts_; }
  bool operator!=(const PointSet& o) const { return !(*this == o); }

private:
  std::vector<Point> pts_;
};

// Ordered, duplicate-free line collection.
class LineSet {
public:
  LineSet() = default;
  explicit LineSet(std::vector<LineKey> lines);

  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }
  const LineKey& operator[](std::size_t i) const { return lines_[i]; }
  const std::vector<LineKey>& lines() const { return lines_; }

  bool contains(const LineKey& k) const;

  std::vector<LineKey>::const_iterator begin() const { return lines_.begin(); }
  std::vector<LineKey>::const_iterator end() const { return lines_.end(); }

  bool operator==(const LineSet& o) const { return lines_ == o.lines_; }
  bool operator!=(const LineSet& o) const { return !(*this == o); }

private:
  std::vector<LineKey> lines_;
};

// Sign of the exact cross product (q-p) x (r-p): +1 counterclockwise,
// -1 clockwise, 0 collinear (including coincident inputs).
int orientation(const Point& p, const Point& q, const Point& r);

bool collinear(const Point& p, const Point& q, const Point& r);

// Canonical LineKey through two distinct points; throws "identical-points".
LineKey line_through(const Point& p, const Point& q);

bool on_line(const LineKey& l, const Point& p);

Rat squared_distance(const Point& p, const Point& q);

// True iff no line contains three or more points of s.
bool is_general_position(const PointSet& s);

// Intersection point of two lines; nullopt when parallel or identical.
std::optional<Point> line_intersection(const LineKey& l1, const LineKey& l2);

// Canonical line given raw integer coefficients; throws "invalid-line" on (a,b)=(0,0).
LineKey make_line(Int a, Int b, Int c);

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

// int64 view of a point set; available when every coordinate is an integer
// with |v| <= 2^61 (all derived quantities then fit in __int128).
struct LatticeView {
  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> ys;
};
std::optional<LatticeView> lattice_view(const PointSet& s);
std::optional<std::pair<std::int64_t, std::int64_t>> as_lattice(const Point& p);

// Machine-word canonical line coefficients; nullopt when a reduced
// coefficient does not fit in int64.
struct Key64 {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;
  bool operator==(const Key64& o) const { return a == o.a && b == o.b && c == o.c; }
};
struct Key64Hash {
  std::size_t operator()(const Key64& k) const;
};
std::optional<Key64> line_key64(std::int64_t px, std::int64_t py, std::int64_t qx,
                                std::int64_t qy);
LineKey widen(const Key64& k);

// Homogeneous form (x, y, w) with w > 0; precomputing it once per set keeps
// the rational pair loops off repeated numerator/denominator products.
struct Homog {
  Int x;
  Int y;
  Int w;
};
Homog to_homog(const Point& p);
LineKey line_from_homog(const Homog& p, const Homog& q);  // requires p != q

}  // namespace detail

}  // namespace gpss
