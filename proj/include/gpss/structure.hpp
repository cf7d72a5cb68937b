#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gpss/geometry.hpp"

namespace gpss {

// Per-line point counts for every line determined by >= 2 points of a set,
// sorted by LineKey. The pair sum over entries of C(t,2) equals C(n,2).
struct LineProfile {
  std::vector<std::pair<LineKey, int>> entries;
};

LineProfile line_profile(const PointSet& s);  // requires n >= 2

// Number of collinear triples: sum of C(t,3) over determined lines.
std::uint64_t collinear_triples(const PointSet& s);

// Largest number of points of s on a single determined line; in [2, n].
int max_collinear(const PointSet& s);  // requires n >= 2

// Extremes of squared pairwise distance; spread_sq = max_sq / min_sq.
struct DensityReport {
  Rat min_sq;
  Rat max_sq;
  Rat spread_sq;
};

DensityReport density_report(const PointSet& s);  // requires n >= 2

// True iff spread_sq <= alpha^2 * n (exact rational comparison).
// Sets with fewer than two points are trivially dense.
bool is_alpha_dense(const PointSet& s, const Rat& alpha);

// A concrete set of lines covering every point of the input. size bounds the
// optimal cover number from above; any general-position subset has at most
// two points per cover line, so 2*size is a sound upper bound on it.
struct CoverCertificate {
  LineSet lines;
  int size = 0;
  bool covered = false;
};

// Greedy cover: repeatedly take the determined line with the most uncovered
// points (ties: smallest LineKey); a lone leftover point gets a vertical line.
CoverCertificate greedy_line_cover(const PointSet& s);  // requires n >= 1

// All pairwise intersection points of the lines, deduplicated.
PointSet arrangement_vertices(const LineSet& l);

// True iff the arrangement has at least c * n^2 vertices.
bool is_generic(const LineSet& l, const Rat& c);

// Point/line incidence structure of the determined lines of a set.
// Lines are sorted by LineKey; members and per-point line ids are sorted.
struct IncidenceIndex {
  std::vector<LineKey> lines;
  std::vector<std::vector<std::int32_t>> line_points;  // per line: point indices, t >= 2
  std::vector<std::vector<std::int32_t>> point_lines;  // per point: incident line ids
};

IncidenceIndex build_incidence(const PointSet& s);

}  // namespace gpss
