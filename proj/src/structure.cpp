#include "gpss/structure.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace gpss {

namespace {

using detail::Key64;
using detail::Key64Hash;

// t from the number of point pairs C(t,2) sharing one line.
int points_from_pairs(std::uint64_t pairs) {
  auto t = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * double(pairs))) / 2.0);
  while (t * (t - 1) / 2 > pairs) --t;
  while ((t + 1) * t / 2 <= pairs) ++t;
  return static_cast<int>(t);
}

// Pair counts per determined line, keyed by machine-word coefficients.
// nullopt when some point or reduced coefficient exceeds the int64 range.
std::optional<std::unordered_map<Key64, std::uint64_t, Key64Hash>> pair_counts64(
    const PointSet& s) {
  auto view = detail::lattice_view(s);
  if (!view) return std::nullopt;
  const std::size_t n = s.size();
  std::unordered_map<Key64, std::uint64_t, Key64Hash> counts;
  counts.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto key = detail::line_key64(view->xs[i], view->ys[i], view->xs[j], view->ys[j]);
      if (!key) return std::nullopt;
      ++counts[*key];
    }
  }
  return counts;
}

std::unordered_map<LineKey, std::uint64_t, LineKeyHash> pair_counts_big(const PointSet& s) {
  const std::size_t n = s.size();
  std::vector<detail::Homog> hs;
  hs.reserve(n);
  for (const Point& p : s) hs.push_back(detail::to_homog(p));
  std::unordered_map<LineKey, std::uint64_t, LineKeyHash> counts;
  counts.reserve(n * (n - 1) / 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ++counts[detail::line_from_homog(hs[i], hs[j])];
  return counts;
}

// Point multiplicities of all determined lines (unordered).
std::vector<int> line_multiplicities(const PointSet& s) {
  std::vector<int> result;
  if (auto fast = pair_counts64(s)) {
    result.reserve(fast->size());
    for (const auto& [key, pairs] : *fast) result.push_back(points_from_pairs(pairs));
    return result;
  }
  auto counts = pair_counts_big(s);
  result.reserve(counts.size());
  for (const auto& [key, pairs] : counts) result.push_back(points_from_pairs(pairs));
  return result;
}

void require_at_least(const PointSet& s, std::size_t k, const char* what) {
  if (s.size() < k)
    throw PreconditionError("too-few-points", std::string(what) + " needs at least " +
                                                  std::to_string(k) + " points");
}

}  // namespace

LineProfile line_profile(const PointSet& s) {
  require_at_least(s, 2, "line_profile");
  LineProfile profile;
  if (auto fast = pair_counts64(s)) {
    profile.entries.reserve(fast->size());
    for (const auto& [key, pairs] : *fast)
      profile.entries.emplace_back(detail::widen(key), points_from_pairs(pairs));
  } else {
    auto counts = pair_counts_big(s);
    profile.entries.reserve(counts.size());
    for (const auto& [key, pairs] : counts)
      profile.entries.emplace_back(key, points_from_pairs(pairs));
  }
  std::sort(profile.entries.begin(), profile.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return profile;
}

std::uint64_t collinear_triples(const PointSet& s) {
  if (s.size() < 3) return 0;
  std::uint64_t total = 0;
  for (int t : line_multiplicities(s)) {
    if (t >= 3) {
      std::uint64_t u = t;
      total += u * (u - 1) * (u - 2) / 6;
    }
  }
  return total;
}

int max_collinear(const PointSet& s) {
  require_at_least(s, 2, "max_collinear");
  int best = 2;
  for (int t : line_multiplicities(s)) best = std::max(best, t);
  return best;
}

DensityReport density_report(const PointSet& s) {
  require_at_least(s, 2, "density_report");
  const std::size_t n = s.size();
  DensityReport report;
  if (auto view = detail::lattice_view(s)) {
    using detail::i128;
    i128 min_sq = -1, max_sq = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        i128 dx = i128(view->xs[i]) - view->xs[j];
        i128 dy = i128(view->ys[i]) - view->ys[j];
        i128 d2 = dx * dx + dy * dy;
        if (min_sq < 0 || d2 < min_sq) min_sq = d2;
        if (d2 > max_sq) max_sq = d2;
      }
    }
    auto to_int = [](i128 v) {  // v >= 0 here
      auto u = static_cast<unsigned __int128>(v);
      Int r = static_cast<std::uint64_t>(u >> 64);
      r <<= 64;
      r += static_cast<std::uint64_t>(u);
      return r;
    };
    report.min_sq = Rat(to_int(min_sq));
    report.max_sq = Rat(to_int(max_sq));
  } else {
    bool first = true;
    Rat min_sq, max_sq;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Rat d2 = squared_distance(s[i], s[j]);
        if (first || d2 < min_sq) min_sq = d2;
        if (first || d2 > max_sq) max_sq = d2;
        first = false;
      }
    }
    report.min_sq = min_sq;
    report.max_sq = max_sq;
  }
  report.spread_sq = report.max_sq / report.min_sq;
  return report;
}

bool is_alpha_dense(const PointSet& s, const Rat& alpha) {
  if (s.size() < 2) return true;
  DensityReport report = density_report(s);
  // spread_sq <= alpha^2 * n, kept in products to stay exact
  return report.max_sq <= alpha * alpha * Rat(Int(s.size())) * report.min_sq;
}

IncidenceIndex build_incidence(const PointSet& s) {
  const std::size_t n = s.size();
  IncidenceIndex index;
  std::vector<std::pair<LineKey, std::vector<std::int32_t>>> built;

  bool fast_done = false;
  if (auto view = detail::lattice_view(s)) {
    std::unordered_map<Key64, std::vector<std::int32_t>, Key64Hash> map;
    map.reserve(n * 2);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto key = detail::line_key64(view->xs[i], view->ys[i], view->xs[j], view->ys[j]);
        if (!key) {
          ok = false;
          break;
        }
        auto& members = map[*key];
        members.push_back(static_cast<std::int32_t>(i));
        members.push_back(static_cast<std::int32_t>(j));
      }
    }
    if (ok) {
      built.reserve(map.size());
      for (auto& [key, members] : map) built.emplace_back(detail::widen(key), std::move(members));
      fast_done = true;
    }
  }
  if (!fast_done) {
    std::vector<detail::Homog> hs;
    hs.reserve(n);
    for (const Point& p : s) hs.push_back(detail::to_homog(p));
    std::unordered_map<LineKey, std::vector<std::int32_t>, LineKeyHash> map;
    map.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto& members = map[detail::line_from_homog(hs[i], hs[j])];
        members.push_back(static_cast<std::int32_t>(i));
        members.push_back(static_cast<std::int32_t>(j));
      }
    }
    built.reserve(map.size());
    for (auto& [key, members] : map) built.emplace_back(key, std::move(members));
  }

  std::sort(built.begin(), built.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  index.lines.reserve(built.size());
  index.line_points.reserve(built.size());
  index.point_lines.assign(n, {});
  for (auto& [key, members] : built) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto id = static_cast<std::int32_t>(index.lines.size());
    for (std::int32_t p : members) index.point_lines[p].push_back(id);
    index.lines.push_back(std::move(key));
    index.line_points.push_back(std::move(members));
  }
  return index;
}

CoverCertificate greedy_line_cover(const PointSet& s) {
  require_at_least(s, 1, "greedy_line_cover");
  const std::size_t n = s.size();
  std::vector<LineKey> chosen;
  std::vector<bool> covered(n, false);
  std::size_t uncovered = n;

  if (n >= 2) {
    IncidenceIndex index = build_incidence(s);
    std::vector<int> gain(index.lines.size());
    for (std::size_t l = 0; l < index.lines.size(); ++l)
      gain[l] = static_cast<int>(index.line_points[l].size());
    while (uncovered > 0) {
      std::size_t best = index.lines.size();
      int best_gain = 1;  // a determined line is only worth taking for >= 2 points
      for (std::size_t l = 0; l < index.lines.size(); ++l) {
        if (gain[l] > best_gain) {
          best_gain = gain[l];
          best = l;  // lines are key-sorted, so the first max is the smallest key
        }
      }
      if (best == index.lines.size()) break;
      chosen.push_back(index.lines[best]);
      for (std::int32_t p : index.line_points[best]) {
        if (covered[p]) continue;
        covered[p] = true;
        --uncovered;
        for (std::int32_t l : index.point_lines[p]) --gain[l];
      }
    }
  }
  // isolated leftovers: one vertical line each
  for (std::size_t i = 0; i < n && uncovered > 0; ++i) {
    if (covered[i]) continue;
    chosen.push_back(LineKey{Int(denominator(s[i].x)), Int(0), Int(-numerator(s[i].x))});
    covered[i] = true;
    --uncovered;
  }

  CoverCertificate cert;
  cert.lines = LineSet(std::move(chosen));
  cert.size = static_cast<int>(cert.lines.size());
  cert.covered = true;
  for (const Point& p : s) {
    bool hit = false;
    for (const LineKey& l : cert.lines) {
      if (on_line(l, p)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      cert.covered = false;
      break;
    }
  }
  return cert;
}

PointSet arrangement_vertices(const LineSet& l) {
  std::vector<Point> vertices;
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (auto v = line_intersection(l[i], l[j])) vertices.push_back(std::move(*v));
  return PointSet(std::move(vertices));
}

bool is_generic(const LineSet& l, const Rat& c) {
  if (l.size() < 2) throw PreconditionError("too-few-lines", "is_generic needs >= 2 lines");
  if (c <= 0) throw PreconditionError("invalid-params", "genericity constant must be positive");
  Int n2 = Int(l.size()) * Int(l.size());
  Int vertices = Int(arrangement_vertices(l).size());
  return Rat(vertices) >= c * Rat(n2);
}

}  // namespace gpss
