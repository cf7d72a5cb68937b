#include "gpss/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace gpss {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

Rat parse_coord(const std::string& token, const std::string& source, int lineno) {
  auto value = parse_rat(token);
  if (!value) throw ParseError(source, lineno, "bad coordinate '" + token + "'");
  return *value;
}

Int parse_int_field(const std::string& token, const std::string& source, int lineno) {
  auto value = parse_rat(token);
  if (!value || !is_integer(*value))
    throw ParseError(source, lineno, "bad integer '" + token + "'");
  return numerator(*value);
}

// Rows of whitespace-separated fields with their 1-based line numbers.
std::vector<std::pair<int, std::vector<std::string>>> read_rows(std::istream& in) {
  std::vector<std::pair<int, std::vector<std::string>>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = split_fields(strip_comment(line));
    if (!fields.empty()) rows.emplace_back(lineno, std::move(fields));
  }
  return rows;
}

PointSet points_from_rows(const std::vector<std::pair<int, std::vector<std::string>>>& rows,
                          const std::string& source) {
  std::vector<Point> pts;
  pts.reserve(rows.size());
  for (const auto& [lineno, fields] : rows) {
    if (fields.size() != 2)
      throw ParseError(source, lineno,
                       "expected 2 point fields, got " + std::to_string(fields.size()));
    pts.emplace_back(parse_coord(fields[0], source, lineno),
                     parse_coord(fields[1], source, lineno));
  }
  return PointSet(std::move(pts));
}

LineSet lines_from_rows(const std::vector<std::pair<int, std::vector<std::string>>>& rows,
                        const std::string& source) {
  std::vector<LineKey> lines;
  lines.reserve(rows.size());
  for (const auto& [lineno, fields] : rows) {
    if (fields.size() != 3)
      throw ParseError(source, lineno,
                       "expected 3 line fields, got " + std::to_string(fields.size()));
    Int a = parse_int_field(fields[0], source, lineno);
    Int b = parse_int_field(fields[1], source, lineno);
    Int c = parse_int_field(fields[2], source, lineno);
    if (a == 0 && b == 0) throw ParseError(source, lineno, "degenerate line 0 0 c");
    lines.push_back(make_line(std::move(a), std::move(b), std::move(c)));
  }
  return LineSet(std::move(lines));
}

}  // namespace

std::string point_to_string(const Point& p) {
  return rat_to_string(p.x) + " " + rat_to_string(p.y);
}

std::string line_to_string(const LineKey& k) {
  return k.a.str() + " " + k.b.str() + " " + k.c.str();
}

void write_points(std::ostream& out, const PointSet& s,
                  const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  for (const Point& p : s) out << point_to_string(p) << "\n";
}

void write_lines(std::ostream& out, const LineSet& l,
                 const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  for (const LineKey& k : l) out << line_to_string(k) << "\n";
}

PointSet read_points(std::istream& in, const std::string& source) {
  return points_from_rows(read_rows(in), source);
}

LineSet read_lines(std::istream& in, const std::string& source) {
  return lines_from_rows(read_rows(in), source);
}

Instance read_instance(std::istream& in, const std::string& source) {
  auto rows = read_rows(in);
  Instance inst;
  if (rows.empty()) {
    inst.kind = InstanceKind::Points;
    return inst;
  }
  if (rows.front().second.size() == 3) {
    inst.kind = InstanceKind::Lines;
    inst.lines = lines_from_rows(rows, source);
  } else {
    inst.kind = InstanceKind::Points;
    inst.points = points_from_rows(rows, source);
  }
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_instance(in, path);
}

void write_points_file(const std::string& path, const PointSet& s,
                       const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  write_points(out, s, comments);
}

void write_lines_file(const std::string& path, const LineSet& l,
                      const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  write_lines(out, l, comments);
}

ExperimentRecord make_record(const std::string& family, const std::string& params,
                             long long n, const SolveResult& result, double ms) {
  ExperimentRecord r;
  r.family = family;
  r.params = params;
  r.n = n;
  r.alg = result.algorithm;
  r.size = static_cast<long long>(result.chosen.size());
  r.bound = result.opt_upper_bound;
  r.bound_source = bound_source_name(result.bound_source);
  r.ratio_lb = result.ratio_lower_bound;
  if (result.bound_source == BoundSource::Exact) r.opt = r.size;
  if (result.seed) r.seed = result.seed->value;
  r.ms = ms;
  r.stats = result.stats;
  r.trials = result.trials;
  r.chosen.reserve(result.chosen.size());
  for (const Point& p : result.chosen) r.chosen.push_back(point_to_string(p));
  return r;
}

std::string record_to_json_line(const ExperimentRecord& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["params"] = r.params;
  j["n"] = r.n;
  j["alg"] = r.alg;
  j["size"] = r.size;
  j["bound"] = r.bound;
  j["bound_source"] = r.bound_source;
  j["ratio_lb"] = rat_to_string(r.ratio_lb);
  if (r.opt)
    j["opt"] = *r.opt;
  else
    j["opt"] = nullptr;
  if (r.seed)
    j["seed"] = *r.seed;
  else
    j["seed"] = nullptr;
  j["ms"] = r.ms;
  j["stats"] = r.stats;
  nlohmann::ordered_json trials = nlohmann::ordered_json::array();
  for (const TrialStats& t : r.trials) {
    trials.push_back({{"sample", t.sample_size},
                      {"triples", t.triples_in_sample},
                      {"deletions", t.deletions},
                      {"kept", t.kept}});
  }
  j["trials"] = trials;
  j["chosen"] = r.chosen;
  return j.dump();
}

ExperimentRecord record_from_json_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  ExperimentRecord r;
  r.family = j.at("family").get<std::string>();
  r.params = j.at("params").get<std::string>();
  r.n = j.at("n").get<long long>();
  r.alg = j.at("alg").get<std::string>();
  r.size = j.at("size").get<long long>();
  r.bound = j.at("bound").get<long long>();
  r.bound_source = j.at("bound_source").get<std::string>();
  auto ratio = parse_rat(j.at("ratio_lb").get<std::string>());
  if (!ratio) throw ParseError("<record>", 0, "bad ratio_lb");
  r.ratio_lb = *ratio;
  if (!j.at("opt").is_null()) r.opt = j.at("opt").get<long long>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  r.ms = j.at("ms").get<double>();
  for (const auto& [key, value] : j.at("stats").items())
    r.stats[key] = value.get<double>();
  for (const auto& t : j.at("trials")) {
    TrialStats ts;
    ts.sample_size = t.at("sample").get<int>();
    ts.triples_in_sample = t.at("triples").get<std::uint64_t>();
    ts.deletions = t.at("deletions").get<int>();
    ts.kept = t.at("kept").get<int>();
    r.trials.push_back(ts);
  }
  for (const auto& c : j.at("chosen")) r.chosen.push_back(c.get<std::string>());
  return r;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string aggregate_csv_header() {
  return "family,params,n,alg,runs,size_median,size_mean,bound,ratio_lb_median,"
         "fitted_median,true_ratio_median,ms_mean";
}

std::string aggregate_csv_row(const AggregateRow& row) {
  std::string out;
  out += row.family + "," + row.params + "," + std::to_string(row.n) + "," + row.alg + ",";
  out += std::to_string(row.runs) + ",";
  out += format_double(row.size_median) + "," + format_double(row.size_mean) + ",";
  out += std::to_string(row.bound) + ",";
  out += format_double(row.ratio_lb_median) + "," + format_double(row.fitted_median) + ",";
  out += row.true_ratio ? format_double(*row.true_ratio) : std::string();
  out += "," + format_double(row.ms_mean);
  return out;
}

}  // namespace gpss
