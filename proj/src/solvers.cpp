#include "gpss/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_set>

#include "gpss/number_theory.hpp"

namespace gpss {

const char* bound_source_name(BoundSource s) {
  switch (s) {
    case BoundSource::RowBound:
      return "row-bound";
    case BoundSource::LineBound:
      return "line-bound";
    case BoundSource::CoverBound:
      return "cover-bound";
    case BoundSource::Exact:
      return "exact";
  }
  return "unknown";
}

namespace {

Rat ratio_of(std::size_t size, long long bound) {
  if (bound <= 0) return Rat(1);  // empty instance: vacuously optimal
  return make_rat(Int(size), Int(bound));
}

void finish(SolveResult& r) { r.ratio_lower_bound = ratio_of(r.chosen.size(), r.opt_upper_bound); }

void validate_plan(const SamplingPlan& plan) {
  if (!(plan.p > 0.0 && plan.p < 1.0))
    throw PreconditionError("invalid-plan", "sampling probability must lie in (0, 1)");
  if (plan.trials < 1) throw PreconditionError("invalid-plan", "trials must be >= 1");
}

// Independent Bernoulli(p) sampling and cleanup, best of plan.trials trials.
SolveResult run_trials(const char* alg, const PointSet& population, const SamplingPlan& plan,
                       Seed seed) {
  SolveResult r;
  r.algorithm = alg;
  r.seed = seed;
  double sum_sample = 0, sum_triples = 0, sum_deletions = 0;
  PointSet best;
  int best_kept = -1;
  for (int t = 0; t < plan.trials; ++t) {
    std::mt19937_64 rng(mix_seed(seed.value, static_cast<std::uint64_t>(t)));
    std::vector<Point> picked;
    for (const Point& p : population)
      if (uniform_unit(rng) < plan.p) picked.push_back(p);
    PointSet sample(std::move(picked));
    std::uint64_t triples = collinear_triples(sample);
    auto [gp, deletions] = make_general_position(sample);
    TrialStats ts;
    ts.sample_size = static_cast<int>(sample.size());
    ts.triples_in_sample = triples;
    ts.deletions = deletions;
    ts.kept = static_cast<int>(gp.size());
    r.trials.push_back(ts);
    sum_sample += ts.sample_size;
    sum_triples += static_cast<double>(triples);
    sum_deletions += deletions;
    if (ts.kept > best_kept) {
      best_kept = ts.kept;
      best = std::move(gp);
    }
  }
  r.chosen = std::move(best);
  r.stats["k"] = plan.k;
  r.stats["p"] = plan.p;
  r.stats["trials"] = plan.trials;
  r.stats["mean_sample_size"] = sum_sample / plan.trials;
  r.stats["mean_triples"] = sum_triples / plan.trials;
  r.stats["mean_deletions"] = sum_deletions / plan.trials;
  r.stats["deletion_budget"] = plan.k / 2;  // the calibration target for mean deletions
  return r;
}

bool vertex_count_generic(std::size_t vertex_count, std::size_t line_count, const Rat& c) {
  return Rat(Int(vertex_count)) >= c * Rat(Int(line_count) * Int(line_count));
}

SolveResult arrangement_core(const LineSet& l, const PointSet& population, bool generic,
                             const SamplingPlan& plan, Seed seed) {
  validate_plan(plan);
  SolveResult r = run_trials("sample-arrangement", population, plan, seed);
  r.opt_upper_bound = 2 * static_cast<long long>(l.size());
  r.bound_source = BoundSource::LineBound;
  r.stats["N"] = static_cast<double>(population.size());
  r.stats["generic"] = generic ? 1 : 0;
  finish(r);
  return r;
}

// Vertex population of an arrangement, honoring an optional restriction.
PointSet arrangement_population(const LineSet& l, const std::optional<PointSet>& restrict_to) {
  if (l.size() < 2)
    throw PreconditionError("too-few-lines", "sampling needs an arrangement of >= 2 lines");
  PointSet all = arrangement_vertices(l);
  if (restrict_to) {
    if (!all.contains_all(*restrict_to))
      throw PreconditionError("invalid-params",
                              "the restriction contains points that are not arrangement vertices");
    if (restrict_to->empty())
      throw PreconditionError("degenerate-arrangement", "the restriction is empty");
    return *restrict_to;
  }
  if (all.empty())
    throw PreconditionError("degenerate-arrangement", "the arrangement has no vertices");
  return all;
}

SolveResult gridlike_core(const PointSet& s, int cover_size, int ell, const SamplingPlan& plan,
                          Seed seed) {
  validate_plan(plan);
  SolveResult r = run_trials("sample-gridlike", s, plan, seed);
  r.opt_upper_bound = 2 * static_cast<long long>(cover_size);
  r.bound_source = BoundSource::CoverBound;
  double root = std::sqrt(static_cast<double>(s.size()));
  r.stats["ell"] = ell;
  r.stats["cover"] = cover_size;
  r.stats["regime_warning"] = (ell > 2.0 * root || cover_size > 2.0 * root) ? 1 : 0;
  finish(r);
  return r;
}

}  // namespace

SamplingPlan choose_k(PlanVariant variant, int n, std::optional<long long> N,
                      const Rat& c_prime, int trials) {
  if (n < 2) throw PreconditionError("invalid-params", "choose_k needs n >= 2");
  if (c_prime <= 0) throw PreconditionError("invalid-params", "c_prime must be positive");
  if (trials < 1) throw PreconditionError("invalid-params", "trials must be >= 1");
  SamplingPlan plan;
  plan.c_prime = c_prime;
  plan.trials = trials;
  const double cp = c_prime.convert_to<double>();
  const double logn = std::log2(static_cast<double>(n));
  double denom;
  if (variant == PlanVariant::Arrangement) {
    if (!N || *N < 1)
      throw PreconditionError("invalid-params", "arrangement plans need the vertex count N");
    plan.k = cp * n / std::sqrt(logn);
    denom = static_cast<double>(*N);
  } else {
    plan.k = cp * std::sqrt(n / logn);
    denom = n;
  }
  plan.p = plan.k / denom;
  if (plan.p >= 1.0) {
    plan.p = 255.0 / 256.0;
    plan.k = plan.p * denom;
  }
  return plan;
}

std::pair<PointSet, int> make_general_position(const PointSet& x) {
  const std::size_t n = x.size();
  if (n < 3) return {x, 0};
  IncidenceIndex index = build_incidence(x);
  const std::size_t num_lines = index.lines.size();
  std::vector<int> alive_on(num_lines);
  for (std::size_t l = 0; l < num_lines; ++l)
    alive_on[l] = static_cast<int>(index.line_points[l].size());
  std::vector<char> alive(n, 1);
  std::vector<int> heavy_deg(n, 0);
  std::size_t heavy_lines = 0;
  for (std::size_t l = 0; l < num_lines; ++l) {
    if (alive_on[l] >= 3) {
      ++heavy_lines;
      for (std::int32_t p : index.line_points[l]) ++heavy_deg[p];
    }
  }
  int deletions = 0;
  while (heavy_lines > 0) {
    std::size_t victim = n;
    int best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (alive[i] && heavy_deg[i] > best) {
        best = heavy_deg[i];
        victim = i;
      }
    }
    alive[victim] = 0;
    ++deletions;
    for (std::int32_t l : index.point_lines[static_cast<std::int32_t>(victim)]) {
      const int before = alive_on[l]--;
      if (before == 3) {
        --heavy_lines;
        for (std::int32_t p : index.line_points[l])
          if (alive[p]) --heavy_deg[p];
      }
    }
  }
  std::vector<Point> kept;
  kept.reserve(n - deletions);
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) kept.push_back(x[i]);
  return {PointSet(std::move(kept)), deletions};
}

SolveResult exact_gpss(const PointSet& s, std::uint64_t node_budget) {
  struct Search {
    const PointSet& s;
    const int n;
    const std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<int> chosen;
    std::vector<int> best;
    std::unordered_set<LineKey, LineKeyHash> chosen_lines;

    Search(const PointSet& set, std::uint64_t node_budget)
        : s(set), n(static_cast<int>(set.size())), budget(node_budget) {}

    bool compatible(int cand) const {
      for (int q : chosen)
        if (chosen_lines.count(line_through(s[cand], s[q]))) return false;
      return true;
    }

    // How many more points any completion could still add.
    int upper_bound(int from) const {
      std::vector<Point> rem;
      for (int i = from; i < n; ++i)
        if (compatible(i)) rem.push_back(s[i]);
      if (rem.empty()) return 0;
      if (rem.size() > 40) return static_cast<int>(rem.size());
      auto count = static_cast<int>(rem.size());
      CoverCertificate cover = greedy_line_cover(PointSet(std::move(rem)));
      return std::min(count, 2 * cover.size);
    }

    void dfs(int i) {
      if (exhausted) return;
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      if (chosen.size() > best.size()) best = chosen;
      if (i == n) return;
      if (static_cast<int>(chosen.size()) + upper_bound(i) <= static_cast<int>(best.size()))
        return;
      if (compatible(i)) {
        std::vector<LineKey> added;
        added.reserve(chosen.size());
        for (int q : chosen) added.push_back(line_through(s[i], s[q]));
        for (const LineKey& k : added) chosen_lines.insert(k);
        chosen.push_back(i);
        dfs(i + 1);
        chosen.pop_back();
        for (const LineKey& k : added) chosen_lines.erase(k);
      }
      dfs(i + 1);
    }
  };

  Search search(s, node_budget);
  search.dfs(0);

  SolveResult r;
  r.algorithm = "exact";
  std::vector<Point> pts;
  pts.reserve(search.best.size());
  for (int i : search.best) pts.push_back(s[i]);
  r.chosen = PointSet(std::move(pts));
  if (search.exhausted) {
    r.bound_source = BoundSource::CoverBound;
    r.opt_upper_bound = s.empty() ? 0 : 2 * static_cast<long long>(greedy_line_cover(s).size);
  } else {
    r.bound_source = BoundSource::Exact;
    r.opt_upper_bound = static_cast<long long>(r.chosen.size());
  }
  r.stats["nodes"] = static_cast<double>(search.nodes);
  r.stats["budget_exhausted"] = search.exhausted ? 1 : 0;
  finish(r);
  return r;
}

SolveResult greedy_gpss(const PointSet& s, GreedyOrder order, Seed seed) {
  const std::size_t n = s.size();
  std::vector<int> scan(n);
  std::iota(scan.begin(), scan.end(), 0);
  if (order == GreedyOrder::SeededShuffle) {
    auto rng = make_engine(seed);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::size_t j = i + uniform_below(rng, n - i);
      std::swap(scan[i], scan[j]);
    }
  }
  std::unordered_set<LineKey, LineKeyHash> chosen_lines;
  std::vector<int> chosen;
  std::vector<LineKey> candidate_lines;
  for (int i : scan) {
    candidate_lines.clear();
    bool ok = true;
    for (int q : chosen) {
      LineKey k = line_through(s[i], s[q]);
      if (chosen_lines.count(k)) {
        ok = false;
        break;
      }
      candidate_lines.push_back(std::move(k));
    }
    if (!ok) continue;
    for (LineKey& k : candidate_lines) chosen_lines.insert(std::move(k));
    chosen.push_back(i);
  }
  SolveResult r;
  r.algorithm = "greedy";
  std::vector<Point> pts;
  pts.reserve(chosen.size());
  for (int i : chosen) pts.push_back(s[i]);
  r.chosen = PointSet(std::move(pts));
  r.bound_source = BoundSource::CoverBound;
  r.opt_upper_bound = s.empty() ? 0 : 2 * static_cast<long long>(greedy_line_cover(s).size);
  if (order == GreedyOrder::SeededShuffle) r.seed = seed;
  finish(r);
  return r;
}

SolveResult dense_lattice_gpss(const PointSet& s, const Rat& alpha) {
  if (s.empty()) throw PreconditionError("invalid-params", "dense_lattice_gpss needs points");
  for (const Point& p : s)
    if (!is_integer(p.x) || !is_integer(p.y))
      throw PreconditionError("not-lattice", "dense_lattice_gpss needs integer coordinates");
  if (!is_alpha_dense(s, alpha))
    throw PreconditionError("not-dense", "input fails the alpha-density check");

  Int min_x = numerator(s[0].x), max_x = min_x;
  Int min_y = numerator(s[0].y), max_y = min_y;
  for (const Point& p : s) {
    const Int& x = numerator(p.x);
    const Int& y = numerator(p.y);
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  // smallest grid holding the translated set; never larger than the
  // density-derived bound when the minimum spacing is one
  Int m_big = std::max(max_x - min_x, max_y - min_y) + 1;
  auto m64 = as_int64(m_big);
  if (!m64 || *m64 > (std::int64_t{1} << 62))
    throw PreconditionError("overflow", "bounding box exceeds the supported grid size");
  const auto m = static_cast<std::uint64_t>(*m64);
  const std::uint64_t p = next_prime_at_least(m);

  std::map<Int, std::vector<int>> buckets;  // class index -> point ids
  const Int prime(p);
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    Int x = numerator(s[idx].x) - min_x;
    Int y = numerator(s[idx].y) - min_y;
    Int residue = (x % prime) * (x % prime) % prime;
    buckets[y - residue].push_back(static_cast<int>(idx));
  }
  const std::vector<int>* best = nullptr;
  Int best_index;
  for (const auto& [index, members] : buckets) {
    if (!best || members.size() > best->size()) {  // map order makes ties pick the smallest index
      best = &members;
      best_index = index;
    }
  }

  SolveResult r;
  r.algorithm = "dense";
  std::vector<Point> pts;
  pts.reserve(best->size());
  for (int i : *best) pts.push_back(s[i]);
  r.chosen = PointSet(std::move(pts));
  r.bound_source = BoundSource::RowBound;
  r.opt_upper_bound = 2 * static_cast<long long>(m);
  r.stats["m"] = static_cast<double>(m);
  r.stats["prime"] = static_cast<double>(p);
  r.stats["classes"] = static_cast<double>(m + p - 1);
  r.stats["nonempty_classes"] = static_cast<double>(buckets.size());
  r.stats["class_index"] = best_index.convert_to<double>();
  r.stats["guarantee"] = std::ceil(static_cast<double>(s.size()) / static_cast<double>(m + p - 1));
  finish(r);
  return r;
}

SolveResult sample_delete_arrangement(const LineSet& l,
                                      const std::optional<PointSet>& restrict_to,
                                      const SamplingPlan& plan, Seed seed,
                                      const Rat& genericity_c) {
  PointSet population = arrangement_population(l, restrict_to);
  bool generic = vertex_count_generic(population.size(), l.size(), genericity_c);
  return arrangement_core(l, population, generic, plan, seed);
}

SolveResult sample_delete_gridlike(const PointSet& s, const SamplingPlan& plan, Seed seed) {
  if (s.size() < 2)
    throw PreconditionError("too-few-points", "sample_delete_gridlike needs >= 2 points");
  int ell = max_collinear(s);
  CoverCertificate cover = greedy_line_cover(s);
  return gridlike_core(s, cover.size, ell, plan, seed);
}

SolveResult solve_arrangement_adaptive(const LineSet& l,
                                       const std::optional<PointSet>& restrict_to,
                                       const std::optional<Rat>& c_prime, int trials,
                                       Seed seed, const Rat& genericity_c) {
  PointSet population = arrangement_population(l, restrict_to);
  bool generic = vertex_count_generic(population.size(), l.size(), genericity_c);
  const int n = static_cast<int>(l.size());
  const auto N = static_cast<long long>(population.size());
  if (c_prime) {
    SamplingPlan plan = choose_k(PlanVariant::Arrangement, n, N, *c_prime, trials);
    return arrangement_core(l, population, generic, plan, seed);
  }
  std::optional<SolveResult> best;
  int attempts = 0;
  for (int a = 0; a <= 6; ++a) {
    SamplingPlan plan =
        choose_k(PlanVariant::Arrangement, n, N, make_rat(Int(1), Int(1) << a), trials);
    SolveResult res = arrangement_core(l, population, generic, plan,
                                       Seed{mix_seed(seed.value, 0xA17E0000ULL + a)});
    ++attempts;
    bool calibrated = res.stats["mean_deletions"] <= plan.k / 2.0;
    if (!best || res.chosen.size() > best->chosen.size()) best = std::move(res);
    if (calibrated) break;
  }
  best->seed = seed;
  best->stats["attempts"] = attempts;
  return *std::move(best);
}

SolveResult solve_gridlike_adaptive(const PointSet& s, const std::optional<Rat>& c_prime,
                                    int trials, Seed seed) {
  if (s.size() < 2)
    throw PreconditionError("too-few-points", "sample_delete_gridlike needs >= 2 points");
  int ell = max_collinear(s);
  CoverCertificate cover = greedy_line_cover(s);
  const auto n = static_cast<int>(s.size());
  if (c_prime) {
    SamplingPlan plan = choose_k(PlanVariant::GridLike, n, std::nullopt, *c_prime, trials);
    return gridlike_core(s, cover.size, ell, plan, seed);
  }
  std::optional<SolveResult> best;
  int attempts = 0;
  for (int a = 0; a <= 6; ++a) {
    SamplingPlan plan =
        choose_k(PlanVariant::GridLike, n, std::nullopt, make_rat(Int(1), Int(1) << a), trials);
    SolveResult res =
        gridlike_core(s, cover.size, ell, plan, Seed{mix_seed(seed.value, 0x6B1D0000ULL + a)});
    ++attempts;
    bool calibrated = res.stats["mean_deletions"] <= plan.k / 2.0;
    if (!best || res.chosen.size() > best->chosen.size()) best = std::move(res);
    if (calibrated) break;
  }
  best->seed = seed;
  best->stats["attempts"] = attempts;
  return *std::move(best);
}

}  // namespace gpss
