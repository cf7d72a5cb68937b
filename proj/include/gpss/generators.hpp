#pragma once

#include <cstdint>
#include <random>

#include "gpss/geometry.hpp"

namespace gpss {

// Seed for reproducible generation: identical seeds give identical instances.
struct Seed {
  std::uint64_t value = 0;
};

// Decorrelated seed for the stream-th derived task of a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

// Deterministic engine plus bias-free helpers shared by generators and solvers.
std::mt19937_64 make_engine(Seed seed);
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);   // [0, bound)
double uniform_unit(std::mt19937_64& rng);                                // [0, 1), 53-bit

// The m x m integer grid {0..m-1}^2.
PointSet grid(int m);  // m >= 1

// {(x, (x^2 mod p) + i) : 0 <= x < m} for a prime p >= m. Always m points in
// general position; classes for distinct i are disjoint.
PointSet erdos_class(int m, std::uint64_t p, long long i);

// n distinct lattice points sampled from G_m with m = floor(alpha*sqrt(n)/sqrt(2)),
// so the result is alpha-dense by construction. Throws "infeasible-density"
// when m^2 < n.
PointSet dense_lattice(int n, const Rat& alpha, Seed seed);

// Three parallel families (horizontal, vertical, diagonal) with distinct
// intercepts chosen so all cross-family intersections are distinct; the
// arrangement has >= n^2/4 vertices for n >= 6.
LineSet bundle_arrangement(int n);  // n >= 3

// 3 horizontal parallels plus n-3 lines through one common point off the
// parallels: Theta(n) vertices.
LineSet degenerate_arrangement(int n);  // n >= 4

// ceil(keep*n) points sampled from the sqrt(n) x sqrt(n) grid. Any subset is
// covered by the sqrt(n) rows and has at most sqrt(n) collinear.
PointSet grid_like(int n, const Rat& keep, Seed seed);  // n a perfect square

// n distinct canonical lines with raw coefficients in [-range, range],
// resampled on duplicates. Throws "exhausted-space" when fewer than n
// distinct lines exist in range.
LineSet random_lines(int n, int range, Seed seed);  // n >= 2, range >= 1

}  // namespace gpss
