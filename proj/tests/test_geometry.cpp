#include <doctest.h>

#include <random>
#include <vector>

#include "gpss/geometry.hpp"

using namespace gpss;

namespace {

Point pt(long long x, long long y) { return Point(x, y); }

Point rational_pt(long long xn, long long xd, long long yn, long long yd) {
  return Point(make_rat(Int(xn), Int(xd)), make_rat(Int(yn), Int(yd)));
}

long long coord_to_ll(const Coord& c) { return *rat_as_int64(c); }

// independent sign computation straight from the rational cross product
int cross_sign(const Point& p, const Point& q, const Point& r) {
  Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  if (cross > 0) return 1;
  if (cross < 0) return -1;
  return 0;
}

// key validity per the canonical-form rules, checked without line_through
void check_canonical(const LineKey& k, const Point& p, const Point& q) {
  CHECK((k.a != 0 || k.b != 0));
  Int g = gcd(gcd(abs(k.a), abs(k.b)), abs(k.c));
  CHECK(g == 1);
  Int lead = k.a != 0 ? k.a : (k.b != 0 ? k.b : k.c);
  CHECK(lead > 0);
  CHECK(on_line(k, p));
  CHECK(on_line(k, q));
}

}  // namespace

TEST_CASE("orientation on reference triples") {
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
  CHECK(orientation(pt(0, 0), pt(0, 0), pt(1, 0)) == 0);  // coincident inputs
}

TEST_CASE("collinear") {
  CHECK(collinear(pt(0, 0), pt(1, 1), pt(2, 2)));
  CHECK_FALSE(collinear(pt(0, 0), pt(1, 0), pt(0, 1)));
  CHECK_FALSE(collinear(pt(3, 9), pt(0, 0), pt(1, 1)));  // cross product 3*1 - 9*1 = -6
}

TEST_CASE("orientation properties on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> coord(-50, 50);
  std::uniform_int_distribution<long long> shift(-1000, 1000);
  for (int it = 0; it < 500; ++it) {
    Point p = pt(coord(rng), coord(rng));
    Point q = pt(coord(rng), coord(rng));
    Point r = pt(coord(rng), coord(rng));
    int s = orientation(p, q, r);
    CHECK(s == cross_sign(p, q, r));
    // antisymmetry under swapping any two arguments
    CHECK(orientation(q, p, r) == -s);
    CHECK(orientation(p, r, q) == -s);
    CHECK(orientation(r, q, p) == -s);
    // invariance under integer translation
    long long dx = shift(rng), dy = shift(rng);
    auto move = [&](const Point& a) { return pt(coord_to_ll(a.x) + dx, coord_to_ll(a.y) + dy); };
    CHECK(orientation(move(p), move(q), move(r)) == s);
  }
}

TEST_CASE("orientation matches the exact route on huge coordinates") {
  // coordinates near 2^40: the fast path must agree with plain rational arithmetic
  std::mt19937_64 rng(11);
  const long long big = 1LL << 40;
  std::uniform_int_distribution<long long> coord(-big, big);
  for (int it = 0; it < 200; ++it) {
    Point p = pt(coord(rng), coord(rng));
    Point q = pt(coord(rng), coord(rng));
    Point r = pt(coord(rng), coord(rng));
    CHECK(orientation(p, q, r) == cross_sign(p, q, r));
  }
  // a collinear triple with huge coordinates must still report zero
  Point a = pt(big, big - 1);
  Point b = pt(2 * big, 2 * (big - 1));
  Point c = pt(3 * big, 3 * (big - 1));
  CHECK(orientation(a, b, c) == 0);
}

TEST_CASE("line_through reference values") {
  LineKey yx = line_through(pt(0, 0), pt(1, 1));
  CHECK(yx == LineKey{Int(1), Int(-1), Int(0)});
  LineKey yaxis = line_through(pt(0, 0), pt(0, 5));
  CHECK(yaxis == LineKey{Int(1), Int(0), Int(0)});
  LineKey slanted = line_through(pt(0, 1), pt(2, 2));
  CHECK(slanted == LineKey{Int(1), Int(-2), Int(2)});
  check_canonical(slanted, pt(0, 1), pt(2, 2));
  CHECK_THROWS_AS(line_through(pt(1, 1), pt(1, 1)), PreconditionError);
}

TEST_CASE("line_through on rational points clears denominators") {
  Point p = rational_pt(1, 2, 0, 1);
  Point q = rational_pt(0, 1, 1, 3);
  LineKey k = line_through(p, q);
  CHECK(k == LineKey{Int(2), Int(3), Int(-1)});  // 2x + 3y - 1 = 0
  check_canonical(k, p, q);
}

TEST_CASE("line_through properties on random pairs") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> coord(-40, 40);
  std::uniform_int_distribution<long long> den(1, 7);
  for (int it = 0; it < 400; ++it) {
    Point p = rational_pt(coord(rng), den(rng), coord(rng), den(rng));
    Point q = rational_pt(coord(rng), den(rng), coord(rng), den(rng));
    if (p == q) continue;
    LineKey k = line_through(p, q);
    CHECK(k == line_through(q, p));  // symmetric in arguments
    check_canonical(k, p, q);
    // a third point is on the line iff collinear
    Point r = rational_pt(coord(rng), den(rng), coord(rng), den(rng));
    CHECK(on_line(k, r) == collinear(p, q, r));
  }
}

TEST_CASE("collinear points give one identical key from every pair") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> coord(-30, 30);
  for (int it = 0; it < 200; ++it) {
    Point p = pt(coord(rng), coord(rng));
    long long dx = coord(rng), dy = coord(rng);
    if (dx == 0 && dy == 0) continue;
    Point q = pt(coord_to_ll(p.x) + dx, coord_to_ll(p.y) + dy);
    Point r = pt(coord_to_ll(p.x) + 3 * dx, coord_to_ll(p.y) + 3 * dy);
    LineKey k1 = line_through(p, q);
    CHECK(k1 == line_through(p, r));
    CHECK(k1 == line_through(q, r));
  }
}

TEST_CASE("line keys on huge coordinates satisfy the canonical rules") {
  const long long big = 1LL << 40;
  Point p = pt(big, 1);
  Point q = pt(-big + 7, big);
  check_canonical(line_through(p, q), p, q);
}

TEST_CASE("squared_distance") {
  CHECK(squared_distance(pt(0, 0), pt(3, 4)) == Rat(25));
  CHECK(squared_distance(pt(0, 0), pt(0, 0)) == Rat(0));
  CHECK(squared_distance(pt(0, 0), pt(7, 7)) == Rat(98));
}

TEST_CASE("is_general_position") {
  CHECK_FALSE(is_general_position(PointSet({pt(0, 0), pt(1, 1), pt(2, 2)})));
  CHECK(is_general_position(PointSet({pt(0, 0), pt(5, 3)})));
  CHECK(is_general_position(PointSet{}));
  CHECK(is_general_position(PointSet({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)})));  // a square
  CHECK_FALSE(is_general_position(PointSet({pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)})));
  CHECK(is_general_position(PointSet({pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 3)})));
}

TEST_CASE("point set sorts and dedups") {
  PointSet s({pt(2, 1), pt(0, 0), pt(2, 1), pt(0, 5)});
  REQUIRE(s.size() == 3);
  CHECK(s[0] == pt(0, 0));
  CHECK(s[1] == pt(0, 5));
  CHECK(s[2] == pt(2, 1));
  CHECK(s.contains(pt(0, 5)));
  CHECK_FALSE(s.contains(pt(1, 1)));
  CHECK(s.contains_all(PointSet({pt(0, 0), pt(2, 1)})));
  CHECK_FALSE(s.contains_all(PointSet({pt(0, 0), pt(9, 9)})));
}

TEST_CASE("line_intersection") {
  LineKey x_axis = make_line(Int(0), Int(1), Int(0));  // y = 0
  LineKey y_axis = make_line(Int(1), Int(0), Int(0));  // x = 0
  auto origin = line_intersection(x_axis, y_axis);
  REQUIRE(origin.has_value());
  CHECK(*origin == pt(0, 0));
  // parallels have no vertex
  CHECK_FALSE(line_intersection(x_axis, make_line(Int(0), Int(1), Int(-2))).has_value());
  CHECK_FALSE(line_intersection(x_axis, x_axis).has_value());
  // rational vertex: y = 2x and y = -x + 1 meet at (1/3, 2/3)
  auto v = line_intersection(make_line(Int(2), Int(-1), Int(0)),
                             make_line(Int(1), Int(1), Int(-1)));
  REQUIRE(v.has_value());
  CHECK(*v == rational_pt(1, 3, 2, 3));
}

TEST_CASE("make_line canonicalizes raw coefficients") {
  CHECK(make_line(Int(2), Int(2), Int(2)) == LineKey{Int(1), Int(1), Int(1)});
  CHECK(make_line(Int(0), Int(-3), Int(6)) == LineKey{Int(0), Int(1), Int(-2)});
  CHECK(make_line(Int(-4), Int(2), Int(-2)) == LineKey{Int(2), Int(-1), Int(1)});
  CHECK_THROWS_AS(make_line(Int(0), Int(0), Int(1)), PreconditionError);
}
