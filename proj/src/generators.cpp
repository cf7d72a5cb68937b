#include "gpss/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "gpss/number_theory.hpp"

namespace gpss {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_engine(Seed seed) { return std::mt19937_64(mix_seed(seed.value, 0)); }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // rejection sampling keeps the draw unbiased
  std::uint64_t threshold = -bound % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

double uniform_unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

namespace {

// Seeded partial Fisher-Yates: the first `take` entries of a shuffled [0, total).
std::vector<std::uint32_t> sample_indices(std::uint64_t total, std::uint64_t take,
                                          std::mt19937_64& rng) {
  std::vector<std::uint32_t> idx(total);
  for (std::uint64_t i = 0; i < total; ++i) idx[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t i = 0; i < take; ++i) {
    std::uint64_t j = i + uniform_below(rng, total - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(take);
  return idx;
}

}  // namespace

PointSet grid(int m) {
  if (m < 1) throw PreconditionError("invalid-params", "grid needs m >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) pts.emplace_back(x, y);
  return PointSet(std::move(pts));
}

PointSet erdos_class(int m, std::uint64_t p, long long i) {
  if (m < 1) throw PreconditionError("invalid-params", "erdos_class needs m >= 1");
  if (p < static_cast<std::uint64_t>(m) || !is_prime(p))
    throw PreconditionError("invalid-prime",
                            "erdos_class needs a prime p >= m, got p = " + std::to_string(p));
  std::vector<Point> pts;
  pts.reserve(m);
  for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(m); ++x) {
    auto residue = static_cast<std::uint64_t>(detail::u128(x) * x % p);
    Int y = Int(residue) + Int(i);
    pts.emplace_back(Coord(Int(x)), Coord(std::move(y)));
  }
  return PointSet(std::move(pts));
}

PointSet dense_lattice(int n, const Rat& alpha, Seed seed) {
  if (n < 1) throw PreconditionError("invalid-params", "dense_lattice needs n >= 1");
  if (alpha <= 0) throw PreconditionError("invalid-params", "alpha must be positive");
  // largest m with 2*b^2*m^2 <= a^2*n, i.e. m = floor(alpha*sqrt(n)/sqrt(2))
  const Int a = numerator(alpha);
  const Int b = denominator(alpha);
  Int m_big = floor_sqrt(a * a * n / (2 * b * b));
  if (m_big * m_big < n)
    throw PreconditionError("infeasible-density",
                            "alpha too small: the guaranteed grid holds only " +
                                m_big.str() + "^2 points, need " + std::to_string(n));
  auto m = static_cast<std::uint64_t>(m_big);
  std::uint64_t total = m * m;
  auto rng = make_engine(seed);
  auto idx = sample_indices(total, static_cast<std::uint64_t>(n), rng);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::uint32_t id : idx)
    pts.emplace_back(static_cast<long long>(id / m), static_cast<long long>(id % m));
  return PointSet(std::move(pts));
}

LineSet bundle_arrangement(int n) {
  if (n < 3) throw PreconditionError("invalid-params", "bundle_arrangement needs n >= 3");
  int f1 = (n + 2) / 3;
  int rest = n - f1;
  int f2 = (rest + 1) / 2;
  int f3 = rest - f2;
  std::vector<LineKey> lines;
  lines.reserve(n);
  for (int i = 0; i < f1; ++i) lines.push_back(LineKey{Int(0), Int(1), Int(-i)});  // y = i
  for (int j = 0; j < f2; ++j) lines.push_back(LineKey{Int(1), Int(0), Int(-j)});  // x = j
  // diagonal intercepts start beyond any horizontal/vertical difference, so no
  // three lines meet in one point and all cross-family vertices are distinct
  for (int d = 0; d < f3; ++d) lines.push_back(LineKey{Int(1), Int(-1), Int(n + d)});
  return LineSet(std::move(lines));
}

LineSet degenerate_arrangement(int n) {
  if (n < 4) throw PreconditionError("invalid-params", "degenerate_arrangement needs n >= 4");
  std::vector<LineKey> lines;
  lines.reserve(n);
  for (int i = 0; i < 3; ++i) lines.push_back(LineKey{Int(0), Int(1), Int(-i)});  // y = i
  // n-3 lines through (0, 3): x = 0 and y = s*x + 3 for s = 1, 2, ...
  lines.push_back(LineKey{Int(1), Int(0), Int(0)});
  for (int s = 1; s < n - 3; ++s) lines.push_back(LineKey{Int(s), Int(-1), Int(3)});
  return LineSet(std::move(lines));
}

PointSet grid_like(int n, const Rat& keep, Seed seed) {
  if (n < 1) throw PreconditionError("invalid-params", "grid_like needs n >= 1");
  Int side_big = floor_sqrt(Int(n));
  if (side_big * side_big != n)
    throw PreconditionError("invalid-params", "grid_like needs a perfect square n");
  if (keep <= 0 || keep > 1)
    throw PreconditionError("invalid-params", "keep must be in (0, 1]");
  Int count_big = ceil_div(numerator(keep) * n, denominator(keep));
  auto count = static_cast<std::uint64_t>(count_big);
  if (count < 2) throw PreconditionError("invalid-params", "grid_like needs ceil(keep*n) >= 2");
  auto side = static_cast<std::uint64_t>(side_big);
  auto rng = make_engine(seed);
  auto idx = sample_indices(static_cast<std::uint64_t>(n), count, rng);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::uint32_t id : idx)
    pts.emplace_back(static_cast<long long>(id / side), static_cast<long long>(id % side));
  return PointSet(std::move(pts));
}

LineSet random_lines(int n, int range, Seed seed) {
  if (n < 2) throw PreconditionError("invalid-params", "random_lines needs n >= 2");
  if (range < 1) throw PreconditionError("invalid-params", "range must be >= 1");
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(range) + 1;
  // count the distinct canonical lines when the coefficient box is small
  if (width * width * width <= 4'000'000) {
    long long capacity = 0;
    for (int a = 0; a <= range; ++a) {
      for (int b = (a == 0 ? 0 : -range); b <= range; ++b) {
        if (a == 0 && b == 0) continue;
        for (int c = -range; c <= range; ++c) {
          if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
          ++capacity;
        }
      }
    }
    if (n > capacity)
      throw PreconditionError("exhausted-space",
                              "only " + std::to_string(capacity) +
                                  " distinct lines have coefficients in range");
  }
  auto rng = make_engine(seed);
  std::set<LineKey> seen;
  while (seen.size() < static_cast<std::size_t>(n)) {
    auto draw = [&] { return static_cast<long long>(uniform_below(rng, width)) - range; };
    long long a = draw(), b = draw(), c = draw();
    if (a == 0 && b == 0) continue;
    seen.insert(make_line(Int(a), Int(b), Int(c)));
  }
  return LineSet(std::vector<LineKey>(seen.begin(), seen.end()));
}

}  // namespace gpss
