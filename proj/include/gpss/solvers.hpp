#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpss/generators.hpp"
#include "gpss/geometry.hpp"
#include "gpss/structure.hpp"

namespace gpss {

// What certifies the OPT upper bound of a SolveResult.
enum class BoundSource {
  RowBound,    // 2m: at most two chosen points per grid row
  LineBound,   // 2n: at most two chosen vertices per arrangement line
  CoverBound,  // 2*cover size: at most two chosen points per cover line
  Exact,       // the search completed; bound equals the optimum
};

const char* bound_source_name(BoundSource s);

// One sampling trial of a sample-and-delete run.
struct TrialStats {
  int sample_size = 0;
  std::uint64_t triples_in_sample = 0;
  int deletions = 0;
  int kept = 0;
};

// Output of every subset-selection algorithm. chosen is always a
// general-position subset of the input and |chosen| <= opt_upper_bound.
struct SolveResult {
  PointSet chosen;
  std::string algorithm;
  long long opt_upper_bound = 0;
  BoundSource bound_source = BoundSource::Exact;
  Rat ratio_lower_bound;  // |chosen| / opt_upper_bound, exact
  std::optional<Seed> seed;
  std::map<std::string, double> stats;
  std::vector<TrialStats> trials;
};

// Sampling parameters: expected sample size k, per-point probability p
// (k/N over arrangement vertices, k/n over points), calibration constant
// c_prime and the number of independent trials.
struct SamplingPlan {
  double k = 0.0;
  double p = 0.0;
  Rat c_prime;
  int trials = 1;
};

enum class PlanVariant { Arrangement, GridLike };

inline constexpr int kDefaultTrials = 50;

// k = c' * n / sqrt(log2 n) for arrangements (p = k/N, N required),
// k = c' * sqrt(n / log2 n) for grid-like sets (p = k/n);
// clamped to p = 255/256 when the formula would give p >= 1.
SamplingPlan choose_k(PlanVariant variant, int n, std::optional<long long> N,
                      const Rat& c_prime, int trials = kDefaultTrials);

// Branch-and-bound oracle. Explores include/exclude decisions, pruning with
// the best solution so far and twice a greedy cover of the still-compatible
// candidates. Within budget the result is optimal (BoundSource::Exact);
// otherwise the best subset found is returned under a cover bound and
// stats["budget_exhausted"] is set.
SolveResult exact_gpss(const PointSet& s, std::uint64_t node_budget = 1'000'000);

enum class GreedyOrder { InputOrder, SeededShuffle };

// Scans points in the given order and keeps any point that does not complete
// a collinear triple with two already-kept points.
SolveResult greedy_gpss(const PointSet& s, GreedyOrder order = GreedyOrder::InputOrder,
                        Seed seed = {});

// Constant-factor algorithm for alpha-dense lattice sets: translate into the
// smallest enclosing grid G_m, pick a prime p >= m, bucket points by the
// class index y - (x^2 mod p), and return the largest bucket (smallest index
// wins ties). Guarantees at least ceil(n / (m+p-1)) points; OPT <= 2m.
// Throws "not-lattice" for non-integer input and "not-dense" when the
// alpha-density check fails.
SolveResult dense_lattice_gpss(const PointSet& s, const Rat& alpha);

// Deletes points until no line carries three or more: each round removes the
// point on the most lines that currently carry >= 3 points (ties: smallest
// point). Deletions never exceed the input's collinear triple count.
std::pair<PointSet, int> make_general_position(const PointSet& x);

// Sample-and-delete over arrangement vertices (or the given subset of them):
// per trial, keep each vertex with probability plan.p, make the sample
// general position, and return the best trial. OPT <= 2n via the line bound.
SolveResult sample_delete_arrangement(const LineSet& l,
                                      const std::optional<PointSet>& restrict_to,
                                      const SamplingPlan& plan, Seed seed,
                                      const Rat& genericity_c = Rat(1, 10));

// Sample-and-delete over a point set; OPT <= 2 * greedy cover size.
SolveResult sample_delete_gridlike(const PointSet& s, const SamplingPlan& plan, Seed seed);

// Adaptive calibration: start from c' = 1, halve k while the mean deletion
// count exceeds k/2 (at most 6 halvings), keep the best output overall.
// A caller-supplied c_prime skips the adaptation.
SolveResult solve_arrangement_adaptive(const LineSet& l,
                                       const std::optional<PointSet>& restrict_to,
                                       const std::optional<Rat>& c_prime, int trials,
                                       Seed seed, const Rat& genericity_c = Rat(1, 10));
SolveResult solve_gridlike_adaptive(const PointSet& s, const std::optional<Rat>& c_prime,
                                    int trials, Seed seed);

}  // namespace gpss
