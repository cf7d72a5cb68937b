#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpss/errors.hpp"
#include "gpss/geometry.hpp"
#include "gpss/solvers.hpp"

namespace gpss {

// Text formats:
//   points — one point per line, two whitespace-separated fields, each an
//            integer or a rational "a/b" in lowest terms
//   lines  — one line per row, three integer fields A B C (A*x + B*y + C = 0)
// '#' starts a comment, blank lines are ignored.

enum class InstanceKind { Points, Lines };

struct Instance {
  InstanceKind kind = InstanceKind::Points;
  PointSet points;
  LineSet lines;
};

void write_points(std::ostream& out, const PointSet& s,
                  const std::vector<std::string>& comments = {});
void write_lines(std::ostream& out, const LineSet& l,
                 const std::vector<std::string>& comments = {});

PointSet read_points(std::istream& in, const std::string& source = "<input>");
LineSet read_lines(std::istream& in, const std::string& source = "<input>");

// Detects points vs lines by field count (2 vs 3).
Instance read_instance(std::istream& in, const std::string& source = "<input>");
Instance read_instance_file(const std::string& path);

void write_points_file(const std::string& path, const PointSet& s,
                       const std::vector<std::string>& comments = {});
void write_lines_file(const std::string& path, const LineSet& l,
                      const std::vector<std::string>& comments = {});

std::string point_to_string(const Point& p);
std::string line_to_string(const LineKey& k);

// One solver run on one instance, serialized as a single JSON object per line
// with stable field names (family, params, n, alg, size, bound, bound_source,
// ratio_lb, opt, seed, ms, stats, trials, chosen).
struct ExperimentRecord {
  std::string family;
  std::string params;
  long long n = 0;
  std::string alg;
  long long size = 0;
  long long bound = 0;
  std::string bound_source;
  Rat ratio_lb;
  std::optional<long long> opt;
  std::optional<std::uint64_t> seed;
  double ms = 0.0;
  std::map<std::string, double> stats;
  std::vector<TrialStats> trials;
  std::vector<std::string> chosen;  // formatted points
};

ExperimentRecord make_record(const std::string& family, const std::string& params,
                             long long n, const SolveResult& result, double ms);

std::string record_to_json_line(const ExperimentRecord& r);
ExperimentRecord record_from_json_line(const std::string& line);

// Aggregate row of a benchmark sweep (one per family/size/algorithm).
struct AggregateRow {
  std::string family;
  std::string params;
  long long n = 0;
  std::string alg;
  int runs = 0;
  double size_median = 0.0;
  double size_mean = 0.0;
  long long bound = 0;
  double ratio_lb_median = 0.0;
  double fitted_median = 0.0;        // scaling constant, algorithm-dependent
  std::optional<double> true_ratio;  // median size/OPT when an exact run is present
  double ms_mean = 0.0;
};

std::string aggregate_csv_header();
std::string aggregate_csv_row(const AggregateRow& row);

double median(std::vector<double> values);

}  // namespace gpss
