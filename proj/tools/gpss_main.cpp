// Command-line front end: instance generation, structural analysis, solver
// runs and benchmark sweeps over the gpss library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpss/generators.hpp"
#include "gpss/io.hpp"
#include "gpss/number_theory.hpp"
#include "gpss/solvers.hpp"
#include "gpss/structure.hpp"

namespace {

using namespace gpss;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSolverPrecondition = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
  auto value = parse_rat(text);
  if (!value) throw UsageError(flag + " expects an integer or a rational a/b, got '" + text + "'");
  return *value;
}

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---- gen ----------------------------------------------------------------

struct GenOptions {
  std::string family;
  int m = 0;
  int n = 0;
  std::uint64_t p = 0;
  long long i = 0;
  std::string alpha = "2";
  std::string keep = "1";
  int range = 100;
  std::uint64_t seed = 0;
  std::string out;
};

struct GeneratedInstance {
  Instance inst;
  std::string params;
};

GeneratedInstance generate(const GenOptions& o) {
  GeneratedInstance g;
  std::ostringstream params;
  if (o.family == "grid") {
    if (o.m < 1) throw UsageError("gen grid needs --m >= 1");
    g.inst.kind = InstanceKind::Points;
    g.inst.points = grid(o.m);
    params << "m=" << o.m;
  } else if (o.family == "erdos") {
    if (o.m < 1) throw UsageError("gen erdos needs --m >= 1");
    std::uint64_t p = o.p != 0 ? o.p : next_prime_at_least(static_cast<std::uint64_t>(o.m));
    g.inst.kind = InstanceKind::Points;
    g.inst.points = erdos_class(o.m, p, o.i);
    params << "m=" << o.m << " p=" << p << " i=" << o.i;
  } else if (o.family == "dense") {
    if (o.n < 1) throw UsageError("gen dense needs --n >= 1");
    Rat alpha = parse_rat_flag(o.alpha, "--alpha");
    g.inst.kind = InstanceKind::Points;
    g.inst.points = dense_lattice(o.n, alpha, Seed{o.seed});
    params << "n=" << o.n << " alpha=" << o.alpha << " seed=" << o.seed;
  } else if (o.family == "bundles") {
    if (o.n < 3) throw UsageError("gen bundles needs --n >= 3");
    g.inst.kind = InstanceKind::Lines;
    g.inst.lines = bundle_arrangement(o.n);
    params << "n=" << o.n;
  } else if (o.family == "degenerate") {
    if (o.n < 4) throw UsageError("gen degenerate needs --n >= 4");
    g.inst.kind = InstanceKind::Lines;
    g.inst.lines = degenerate_arrangement(o.n);
    params << "n=" << o.n;
  } else if (o.family == "gridlike") {
    if (o.n < 1) throw UsageError("gen gridlike needs --n (a perfect square)");
    Rat keep = parse_rat_flag(o.keep, "--keep");
    g.inst.kind = InstanceKind::Points;
    g.inst.points = grid_like(o.n, keep, Seed{o.seed});
    params << "n=" << o.n << " keep=" << o.keep << " seed=" << o.seed;
  } else if (o.family == "lines") {
    if (o.n < 2) throw UsageError("gen lines needs --n >= 2");
    g.inst.kind = InstanceKind::Lines;
    g.inst.lines = random_lines(o.n, o.range, Seed{o.seed});
    params << "n=" << o.n << " range=" << o.range << " seed=" << o.seed;
  } else {
    throw UsageError("unknown family '" + o.family +
                     "' (grid|erdos|dense|bundles|degenerate|gridlike|lines)");
  }
  g.params = params.str();
  return g;
}

int run_gen(const GenOptions& o) {
  GeneratedInstance g = generate(o);
  std::vector<std::string> comments = {"gpss " + o.family + " " + g.params};
  std::size_t count =
      g.inst.kind == InstanceKind::Points ? g.inst.points.size() : g.inst.lines.size();
  if (!o.out.empty()) {
    if (g.inst.kind == InstanceKind::Points)
      write_points_file(o.out, g.inst.points, comments);
    else
      write_lines_file(o.out, g.inst.lines, comments);
    std::cout << o.family << " n=" << count << " -> " << o.out << "\n";
  } else {
    if (g.inst.kind == InstanceKind::Points)
      write_points(std::cout, g.inst.points, comments);
    else
      write_lines(std::cout, g.inst.lines, comments);
    std::cerr << o.family << " n=" << count << "\n";
  }
  return kExitOk;
}

// ---- analyze ------------------------------------------------------------

int run_analyze(const std::string& in_path, const std::vector<std::string>& alphas,
                const std::string& genericity_c, const std::string& out_path) {
  Instance inst = read_instance_file(in_path);
  std::ostringstream report;
  if (inst.kind == InstanceKind::Points) {
    const PointSet& s = inst.points;
    report << "kind: points\n";
    report << "n: " << s.size() << "\n";
    if (s.size() >= 2) {
      report << "max_collinear: " << max_collinear(s) << "\n";
      report << "collinear_triples: " << collinear_triples(s) << "\n";
      DensityReport d = density_report(s);
      report << "min_sq: " << rat_to_string(d.min_sq) << "\n";
      report << "max_sq: " << rat_to_string(d.max_sq) << "\n";
      report << "spread_sq: " << rat_to_string(d.spread_sq) << "\n";
      for (const std::string& a : alphas) {
        Rat alpha = parse_rat_flag(a, "--alpha");
        report << "dense(alpha=" << a << "): " << (is_alpha_dense(s, alpha) ? "yes" : "no")
               << "\n";
      }
    }
    if (!s.empty()) {
      CoverCertificate cover = greedy_line_cover(s);
      report << "greedy_cover: " << cover.size << "\n";
    }
  } else {
    const LineSet& l = inst.lines;
    report << "kind: lines\n";
    report << "n: " << l.size() << "\n";
    PointSet vertices = arrangement_vertices(l);
    report << "vertices: " << vertices.size() << "\n";
    if (vertices.size() >= 2)
      report << "max_collinear_vertices: " << max_collinear(vertices) << "\n";
    if (l.size() >= 2) {
      Rat c = parse_rat_flag(genericity_c, "--genericity-c");
      report << "generic(c=" << genericity_c
             << "): " << (is_generic(l, c) ? "yes" : "no") << "\n";
    }
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << report.str();
  }
  std::cout << report.str();
  return kExitOk;
}

// ---- solve --------------------------------------------------------------

struct SolveOptions {
  std::string in_path;
  std::string alg;
  std::string alpha;
  std::uint64_t budget = 1'000'000;
  std::string order = "input";
  int trials = kDefaultTrials;
  std::string c_prime;  // empty -> adaptive
  std::uint64_t seed = 0;
  std::string restrict_path;
  std::string genericity_c = "1/10";
  std::string out;
  std::string subset_out;
  std::string family = "file";
  std::string params;
};

SolveResult dispatch_solve(const SolveOptions& o, const Instance& inst) {
  Seed seed{o.seed};
  std::optional<Rat> c_prime;
  if (!o.c_prime.empty()) c_prime = parse_rat_flag(o.c_prime, "--c-prime");
  if (o.alg == "exact") {
    if (inst.kind != InstanceKind::Points) throw UsageError("exact needs a point instance");
    return exact_gpss(inst.points, o.budget);
  }
  if (o.alg == "greedy") {
    if (inst.kind != InstanceKind::Points) throw UsageError("greedy needs a point instance");
    if (o.order != "input" && o.order != "shuffle")
      throw UsageError("--order must be input or shuffle");
    GreedyOrder order =
        o.order == "shuffle" ? GreedyOrder::SeededShuffle : GreedyOrder::InputOrder;
    return greedy_gpss(inst.points, order, seed);
  }
  if (o.alg == "dense") {
    if (inst.kind != InstanceKind::Points) throw UsageError("dense needs a point instance");
    if (o.alpha.empty()) throw UsageError("dense needs --alpha");
    return dense_lattice_gpss(inst.points, parse_rat_flag(o.alpha, "--alpha"));
  }
  if (o.alg == "sample-arrangement") {
    if (inst.kind != InstanceKind::Lines)
      throw UsageError("sample-arrangement needs a line instance");
    std::optional<PointSet> restrict_to;
    if (!o.restrict_path.empty()) {
      Instance r = read_instance_file(o.restrict_path);
      if (r.kind != InstanceKind::Points) throw UsageError("--restrict needs a point file");
      restrict_to = r.points;
    }
    Rat gc = parse_rat_flag(o.genericity_c, "--genericity-c");
    SolveResult res =
        solve_arrangement_adaptive(inst.lines, restrict_to, c_prime, o.trials, seed, gc);
    if (res.stats.count("generic") && res.stats.at("generic") == 0)
      std::cerr << "warning: arrangement fails the genericity test (c=" << o.genericity_c
                << "); the output is still sound\n";
    return res;
  }
  if (o.alg == "sample-gridlike") {
    if (inst.kind != InstanceKind::Points)
      throw UsageError("sample-gridlike needs a point instance");
    SolveResult res = solve_gridlike_adaptive(inst.points, c_prime, o.trials, seed);
    if (res.stats.count("regime_warning") && res.stats.at("regime_warning") == 1)
      std::cerr << "warning: max-collinear or cover size exceed the sqrt(n) regime\n";
    return res;
  }
  throw UsageError("unknown algorithm '" + o.alg +
                   "' (exact|greedy|dense|sample-arrangement|sample-gridlike)");
}

int run_solve(const SolveOptions& o) {
  Instance inst = read_instance_file(o.in_path);
  double t0 = now_ms();
  SolveResult result = dispatch_solve(o, inst);
  double elapsed = now_ms() - t0;
  if (!is_general_position(result.chosen)) {
    std::cerr << "internal error: output failed the general-position re-check\n";
    return kExitInternal;
  }
  long long n = inst.kind == InstanceKind::Points ? inst.points.size() : inst.lines.size();
  ExperimentRecord record = make_record(
      o.family, o.params.empty() ? o.in_path : o.params, n, result, elapsed);
  std::string line = record_to_json_line(record);
  std::cout << line << "\n";
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    out << line << "\n";
  }
  if (!o.subset_out.empty())
    write_points_file(o.subset_out, result.chosen, {"gpss subset alg=" + o.alg});
  return kExitOk;
}

// ---- bench --------------------------------------------------------------

struct BenchOptions {
  std::string family;
  std::string sizes;
  std::string algs;
  int trials = kDefaultTrials;
  std::string seeds = "1";
  std::string alpha = "2";
  std::string keep = "1";
  int range = 100;
  std::string c_prime;
  std::uint64_t budget = 1'000'000;
  std::string out;
  std::string records_out;
};

int run_bench(const BenchOptions& o) {
  std::vector<std::string> sizes = split_list(o.sizes);
  std::vector<std::string> algs = split_list(o.algs);
  std::vector<std::string> seeds = split_list(o.seeds);
  if (seeds.empty()) seeds.push_back("1");

  std::ostringstream csv;
  csv << aggregate_csv_header() << "\n";
  std::ostringstream records;

  for (const std::string& size_text : sizes) {
    int size = 0;
    try {
      size = std::stoi(size_text);
    } catch (const std::exception&) {
      throw UsageError("bad size '" + size_text + "' in --sizes");
    }
    // per-seed records of this size, keyed by algorithm
    std::map<std::string, std::vector<std::pair<std::string, ExperimentRecord>>> by_alg;
    std::map<std::string, long long> exact_opt;  // seed -> optimum, when known
    for (const std::string& seed_text : seeds) {
      std::uint64_t seed = 0;
      try {
        seed = std::stoull(seed_text);
      } catch (const std::exception&) {
        throw UsageError("bad seed '" + seed_text + "' in --seeds");
      }
      GenOptions gen_opts;
      gen_opts.family = o.family;
      gen_opts.m = size;
      gen_opts.n = size;
      gen_opts.alpha = o.alpha;
      gen_opts.keep = o.keep;
      gen_opts.range = o.range;
      gen_opts.seed = seed;
      GeneratedInstance g;
      try {
        g = generate(gen_opts);
      } catch (const std::exception& e) {
        records << "{\"family\":\"" << o.family << "\",\"params\":\"" << size_text
                << " seed=" << seed_text << "\",\"error\":\"" << e.what() << "\"}\n";
        std::cerr << "bench instance failed (" << o.family << " " << size_text << " seed "
                  << seed_text << "): " << e.what() << "\n";
        continue;
      }
      long long n = g.inst.kind == InstanceKind::Points ? g.inst.points.size()
                                                        : g.inst.lines.size();
      for (const std::string& alg : algs) {
        SolveOptions so;
        so.alg = alg;
        so.alpha = o.alpha;
        so.budget = o.budget;
        so.trials = o.trials;
        so.c_prime = o.c_prime;
        so.seed = seed;
        so.family = o.family;
        so.params = g.params;
        try {
          double t0 = now_ms();
          SolveResult result = dispatch_solve(so, g.inst);
          double elapsed = now_ms() - t0;
          if (!is_general_position(result.chosen))
            throw std::runtime_error("output failed the general-position re-check");
          ExperimentRecord rec = make_record(o.family, g.params, n, result, elapsed);
          if (rec.opt) exact_opt[seed_text] = *rec.opt;
          records << record_to_json_line(rec) << "\n";
          by_alg[alg].emplace_back(seed_text, std::move(rec));
        } catch (const std::exception& e) {
          records << "{\"family\":\"" << o.family << "\",\"params\":\"" << g.params
                  << "\",\"alg\":\"" << alg << "\",\"error\":\"" << e.what() << "\"}\n";
          std::cerr << "bench row failed (" << o.family << " " << g.params << " " << alg
                    << "): " << e.what() << "\n";
        }
      }
    }
    for (const std::string& alg : algs) {
      auto it = by_alg.find(alg);
      if (it == by_alg.end() || it->second.empty()) continue;
      const auto& recs = it->second;
      AggregateRow row;
      row.family = o.family;
      row.params = recs.front().second.params;
      row.n = recs.front().second.n;
      row.alg = alg;
      row.runs = static_cast<int>(recs.size());
      std::vector<double> sizes_d, ratios, fitted, true_ratios;
      double ms_sum = 0;
      for (const auto& [seed_text, rec] : recs) {
        double sz = static_cast<double>(rec.size);
        sizes_d.push_back(sz);
        ratios.push_back(rec.ratio_lb.convert_to<double>());
        double logn = std::log2(static_cast<double>(std::max<long long>(rec.n, 2)));
        if (alg == "sample-arrangement")
          fitted.push_back(sz * std::sqrt(logn) / static_cast<double>(rec.n));
        else if (alg == "sample-gridlike")
          fitted.push_back(sz * std::sqrt(logn / static_cast<double>(rec.n)));
        else
          fitted.push_back(sz / static_cast<double>(rec.n));
        auto opt = exact_opt.find(seed_text);
        if (opt != exact_opt.end() && opt->second > 0)
          true_ratios.push_back(sz / static_cast<double>(opt->second));
        ms_sum += rec.ms;
      }
      row.size_median = median(sizes_d);
      row.size_mean = 0;
      for (double v : sizes_d) row.size_mean += v;
      row.size_mean /= static_cast<double>(sizes_d.size());
      row.bound = recs.front().second.bound;
      row.ratio_lb_median = median(ratios);
      row.fitted_median = median(fitted);
      if (!true_ratios.empty()) row.true_ratio = median(true_ratios);
      row.ms_mean = ms_sum / static_cast<double>(recs.size());
      csv << aggregate_csv_row(row) << "\n";
    }
  }

  if (!o.out.empty()) {
    std::ofstream out(o.out);
    out << csv.str();
  }
  if (!o.records_out.empty()) {
    std::ofstream out(o.records_out);
    out << records.str();
  }
  std::cout << csv.str();
  return kExitOk;
}

// ---- compare ------------------------------------------------------------

int run_compare(const SolveOptions& base, const std::string& algs_text,
                const std::string& out_path) {
  std::vector<std::string> algs = split_list(algs_text);
  if (algs.empty()) throw UsageError("compare needs --algs");
  Instance inst = read_instance_file(base.in_path);
  long long n = inst.kind == InstanceKind::Points ? inst.points.size() : inst.lines.size();

  std::vector<ExperimentRecord> recs;
  std::optional<long long> opt;
  for (const std::string& alg : algs) {
    SolveOptions so = base;
    so.alg = alg;
    double t0 = now_ms();
    SolveResult result = dispatch_solve(so, inst);
    double elapsed = now_ms() - t0;
    if (!is_general_position(result.chosen)) {
      std::cerr << "internal error: output failed the general-position re-check\n";
      return kExitInternal;
    }
    ExperimentRecord rec = make_record("file", base.in_path, n, result, elapsed);
    if (rec.opt) opt = rec.opt;
    recs.push_back(std::move(rec));
  }

  std::ostringstream csv;
  csv << "alg,n,size,bound,bound_source,ratio_lb,opt,true_ratio,ms\n";
  for (const ExperimentRecord& rec : recs) {
    csv << rec.alg << "," << rec.n << "," << rec.size << "," << rec.bound << ","
        << rec.bound_source << "," << rat_to_string(rec.ratio_lb) << ",";
    if (opt) csv << *opt;
    csv << ",";
    if (opt && *opt > 0) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f",
                    static_cast<double>(rec.size) / static_cast<double>(*opt));
      csv << buf;
    }
    char ms_buf[32];
    std::snprintf(ms_buf, sizeof(ms_buf), "%.3f", rec.ms);
    csv << "," << ms_buf << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << csv.str();
  }
  std::cout << csv.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"general position subset selection toolkit"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("family", gen_opts.family,
                  "grid|erdos|dense|bundles|degenerate|gridlike|lines")
      ->required();
  gen->add_option("--m", gen_opts.m, "grid side / class size");
  gen->add_option("--n", gen_opts.n, "instance size");
  gen->add_option("--p", gen_opts.p, "prime modulus (erdos; default: smallest prime >= m)");
  gen->add_option("--i", gen_opts.i, "class index (erdos)");
  gen->add_option("--alpha", gen_opts.alpha, "density bound, rational a/b");
  gen->add_option("--keep", gen_opts.keep, "kept fraction, rational a/b (gridlike)");
  gen->add_option("--range", gen_opts.range, "coefficient range (lines)");
  gen->add_option("--seed", gen_opts.seed, "64-bit seed");
  gen->add_option("--out", gen_opts.out, "output path (default: stdout)");

  std::string analyze_in, analyze_out, analyze_gc = "1/10";
  std::vector<std::string> analyze_alphas;
  CLI::App* analyze = app.add_subcommand("analyze", "structural measurements of an instance");
  analyze->add_option("input", analyze_in, "instance file")->required();
  analyze->add_option("--alpha", analyze_alphas, "density verdicts to evaluate");
  analyze->add_option("--genericity-c", analyze_gc, "genericity constant, rational a/b");
  analyze->add_option("--out", analyze_out, "also write the report here");

  SolveOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "run a solver on an instance file");
  solve->add_option("input", solve_opts.in_path, "instance file")->required();
  solve->add_option("--alg", solve_opts.alg,
                    "exact|greedy|dense|sample-arrangement|sample-gridlike")
      ->required();
  solve->add_option("--alpha", solve_opts.alpha, "density bound (dense)");
  solve->add_option("--budget", solve_opts.budget, "node budget (exact)");
  solve->add_option("--order", solve_opts.order, "input|shuffle (greedy)");
  solve->add_option("--trials", solve_opts.trials, "sampling trials");
  solve->add_option("--c-prime", solve_opts.c_prime,
                    "fixed calibration constant a/b (default: adaptive)");
  solve->add_option("--seed", solve_opts.seed, "64-bit seed");
  solve->add_option("--restrict", solve_opts.restrict_path,
                    "point file restricting the sampled vertices");
  solve->add_option("--genericity-c", solve_opts.genericity_c, "genericity constant a/b");
  solve->add_option("--out", solve_opts.out, "record output path");
  solve->add_option("--subset-out", solve_opts.subset_out, "chosen subset output path");

  BenchOptions bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "sweep families x sizes x algorithms");
  bench->add_option("--family", bench_opts.family, "instance family")->required();
  bench->add_option("--sizes", bench_opts.sizes, "comma-separated sizes");
  bench->add_option("--algs", bench_opts.algs, "comma-separated algorithms");
  bench->add_option("--trials", bench_opts.trials, "sampling trials per run");
  bench->add_option("--seeds", bench_opts.seeds, "comma-separated seeds");
  bench->add_option("--alpha", bench_opts.alpha, "density bound");
  bench->add_option("--keep", bench_opts.keep, "kept fraction (gridlike)");
  bench->add_option("--range", bench_opts.range, "coefficient range (lines)");
  bench->add_option("--c-prime", bench_opts.c_prime, "fixed calibration constant");
  bench->add_option("--budget", bench_opts.budget, "node budget (exact)");
  bench->add_option("--out", bench_opts.out, "CSV output path");
  bench->add_option("--records", bench_opts.records_out, "per-run record output path");

  SolveOptions compare_opts;
  std::string compare_algs, compare_out;
  CLI::App* compare = app.add_subcommand("compare", "run several algorithms on one instance");
  compare->add_option("input", compare_opts.in_path, "instance file")->required();
  compare->add_option("--algs", compare_algs, "comma-separated algorithms")->required();
  compare->add_option("--alpha", compare_opts.alpha, "density bound (dense)");
  compare->add_option("--budget", compare_opts.budget, "node budget (exact)");
  compare->add_option("--order", compare_opts.order, "input|shuffle (greedy)");
  compare->add_option("--trials", compare_opts.trials, "sampling trials");
  compare->add_option("--c-prime", compare_opts.c_prime, "fixed calibration constant");
  compare->add_option("--seed", compare_opts.seed, "64-bit seed");
  compare->add_option("--genericity-c", compare_opts.genericity_c, "genericity constant");
  compare->add_option("--out", compare_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opts);
    if (analyze->parsed())
      return run_analyze(analyze_in, analyze_alphas, analyze_gc, analyze_out);
    if (solve->parsed()) return run_solve(solve_opts);
    if (bench->parsed()) return run_bench(bench_opts);
    if (compare->parsed()) return run_compare(compare_opts, compare_algs, compare_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return kExitSolverPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
