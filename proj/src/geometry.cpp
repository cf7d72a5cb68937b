#include "gpss/geometry.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>

namespace gpss {

namespace detail {

// Coordinates up to 2^61 keep every intermediate below 2^126.
constexpr std::int64_t kLatticeLimit = std::int64_t{1} << 61;

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::size_t Key64Hash::operator()(const Key64& k) const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(k.a));
  h = mix64(h ^ static_cast<std::uint64_t>(k.b));
  h = mix64(h ^ static_cast<std::uint64_t>(k.c));
  return static_cast<std::size_t>(h);
}

std::optional<std::pair<std::int64_t, std::int64_t>> as_lattice(const Point& p) {
  auto x = rat_as_int64(p.x);
  if (!x || *x > kLatticeLimit || *x < -kLatticeLimit) return std::nullopt;
  auto y = rat_as_int64(p.y);
  if (!y || *y > kLatticeLimit || *y < -kLatticeLimit) return std::nullopt;
  return std::make_pair(*x, *y);
}

std::optional<LatticeView> lattice_view(const PointSet& s) {
  LatticeView view;
  view.xs.reserve(s.size());
  view.ys.reserve(s.size());
  for (const Point& p : s) {
    auto xy = as_lattice(p);
    if (!xy) return std::nullopt;
    view.xs.push_back(xy->first);
    view.ys.push_back(xy->second);
  }
  return view;
}

std::optional<Key64> line_key64(std::int64_t px, std::int64_t py, std::int64_t qx,
                                std::int64_t qy) {
  i128 a = i128(qy) - py;
  i128 b = i128(px) - qx;
  if (a == 0 && b == 0) return std::nullopt;
  i128 c = -(a * px + b * py);
  i128 g = gcd128(gcd128(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  if (a > kInt64Max || b < kInt64Min || b > kInt64Max || c < kInt64Min || c > kInt64Max)
    return std::nullopt;
  return Key64{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
               static_cast<std::int64_t>(c)};
}

LineKey widen(const Key64& k) { return LineKey{Int(k.a), Int(k.b), Int(k.c)}; }

}  // namespace detail

namespace {

int sign_int(const Int& v) { return v.sign(); }

LineKey canonical_line(Int a, Int b, Int c) {
  Int g = gcd(gcd(abs(a), abs(b)), abs(c));
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  int lead = a != 0 ? sign_int(a) : (b != 0 ? sign_int(b) : sign_int(c));
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return LineKey{std::move(a), std::move(b), std::move(c)};
}

}  // namespace

namespace detail {

Homog to_homog(const Point& p) {
  const Int& xn = numerator(p.x);
  const Int& xd = denominator(p.x);
  const Int& yn = numerator(p.y);
  const Int& yd = denominator(p.y);
  return Homog{xn * yd, yn * xd, xd * yd};
}

LineKey line_from_homog(const Homog& p, const Homog& q) {
  Int a = p.y * q.w - q.y * p.w;
  Int b = p.w * q.x - q.w * p.x;
  Int c = p.x * q.y - q.x * p.y;
  return canonical_line(std::move(a), std::move(b), std::move(c));
}

}  // namespace detail

std::size_t LineKeyHash::operator()(const LineKey& k) const {
  std::size_t h = hash_value(k.a);
  h ^= hash_value(k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= hash_value(k.c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

bool PointSet::contains_all(const PointSet& other) const {
  return std::includes(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end());
}

LineSet::LineSet(std::vector<LineKey> lines) : lines_(std::move(lines)) {
  std::sort(lines_.begin(), lines_.end());
  lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
}

bool LineSet::contains(const LineKey& k) const {
  return std::binary_search(lines_.begin(), lines_.end(), k);
}

int orientation(const Point& p, const Point& q, const Point& r) {
  auto lp = detail::as_lattice(p);
  if (lp) {
    auto lq = detail::as_lattice(q);
    if (lq) {
      auto lr = detail::as_lattice(r);
      if (lr) {
        detail::i128 cross = (detail::i128(lq->first) - lp->first) *
                                 (detail::i128(lr->second) - lp->second) -
                             (detail::i128(lq->second) - lp->second) *
                                 (detail::i128(lr->first) - lp->first);
        return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
      }
    }
  }
  detail::Homog hp = detail::to_homog(p), hq = detail::to_homog(q), hr = detail::to_homog(r);
  Int det = hp.x * (hq.y * hr.w - hr.y * hq.w) - hp.y * (hq.x * hr.w - hr.x * hq.w) +
            hp.w * (hq.x * hr.y - hr.x * hq.y);
  return sign_int(det);
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return orientation(p, q, r) == 0;
}

LineKey line_through(const Point& p, const Point& q) {
  if (p == q) throw PreconditionError("identical-points", "no unique line through equal points");
  auto lp = detail::as_lattice(p);
  if (lp) {
    auto lq = detail::as_lattice(q);
    if (lq) {
      auto key = detail::line_key64(lp->first, lp->second, lq->first, lq->second);
      if (key) return detail::widen(*key);
    }
  }
  return detail::line_from_homog(detail::to_homog(p), detail::to_homog(q));
}

bool on_line(const LineKey& l, const Point& p) {
  detail::Homog h = detail::to_homog(p);
  return l.a * h.x + l.b * h.y + l.c * h.w == 0;
}

Rat squared_distance(const Point& p, const Point& q) {
  Rat dx = p.x - q.x;
  Rat dy = p.y - q.y;
  return dx * dx + dy * dy;
}

bool is_general_position(const PointSet& s) {
  const std::size_t n = s.size();
  if (n < 3) return true;
  // A line key seen for two different point pairs means >= 3 collinear.
  auto view = detail::lattice_view(s);
  if (view) {
    std::unordered_map<detail::Key64, int, detail::Key64Hash> seen;
    seen.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto key =
            detail::line_key64(view->xs[i], view->ys[i], view->xs[j], view->ys[j]);
        if (!key) {
          view.reset();
          break;
        }
        if (++seen[*key] >= 2) return false;
      }
      if (!view) break;
    }
    if (view) return true;
  }
  std::vector<detail::Homog> hs;
  hs.reserve(n);
  for (const Point& p : s) hs.push_back(detail::to_homog(p));
  std::unordered_map<LineKey, int, LineKeyHash> seen;
  seen.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (++seen[detail::line_from_homog(hs[i], hs[j])] >= 2) return false;
  return true;
}

std::optional<Point> line_intersection(const LineKey& l1, const LineKey& l2) {
  Int w = l1.a * l2.b - l2.a * l1.b;
  if (w == 0) return std::nullopt;
  Int x = l1.b * l2.c - l2.b * l1.c;
  Int y = l1.c * l2.a - l2.c * l1.a;
  return Point(make_rat(x, w), make_rat(y, w));
}

LineKey make_line(Int a, Int b, Int c) {
  if (a == 0 && b == 0)
    throw PreconditionError("invalid-line", "line coefficients (a,b) may not both be zero");
  return canonical_line(std::move(a), std::move(b), std::move(c));
}

}  // namespace gpss
