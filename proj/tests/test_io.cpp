#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gpss/generators.hpp"
#include "gpss/io.hpp"
#include "gpss/solvers.hpp"

using namespace gpss;

namespace {

Point pt(long long x, long long y) { return Point(x, y); }

}  // namespace

TEST_CASE("point file round trip") {
  PointSet s({pt(0, 0), pt(-3, 7), Point(make_rat(Int(1), Int(2)), make_rat(Int(-5), Int(3)))});
  std::ostringstream out;
  write_points(out, s, {"header comment"});
  std::istringstream in(out.str());
  CHECK(read_points(in) == s);
}

TEST_CASE("line file round trip") {
  LineSet l = bundle_arrangement(7);
  std::ostringstream out;
  write_lines(out, l);
  std::istringstream in(out.str());
  CHECK(read_lines(in) == l);
}

TEST_CASE("round trip is the identity for every generator") {
  auto points_trip = [](const PointSet& s) {
    std::ostringstream out;
    write_points(out, s);
    std::istringstream in(out.str());
    return read_points(in) == s;
  };
  auto lines_trip = [](const LineSet& l) {
    std::ostringstream out;
    write_lines(out, l);
    std::istringstream in(out.str());
    return read_lines(in) == l;
  };
  CHECK(points_trip(grid(5)));
  CHECK(points_trip(erdos_class(9, 11, -4)));
  CHECK(points_trip(dense_lattice(30, Rat(2), Seed{2})));
  CHECK(points_trip(grid_like(49, make_rat(Int(2), Int(3)), Seed{5})));
  CHECK(points_trip(arrangement_vertices(random_lines(10, 12, Seed{5}))));  // rationals
  CHECK(lines_trip(bundle_arrangement(11)));
  CHECK(lines_trip(degenerate_arrangement(9)));
  CHECK(lines_trip(random_lines(25, 40, Seed{6})));
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in("# leading comment\n\n1 2   # trailing comment\n\n  3/2 -4\n");
  PointSet s = read_points(in);
  REQUIRE(s.size() == 2);
  CHECK(s.contains(pt(1, 2)));
  CHECK(s.contains(Point(make_rat(Int(3), Int(2)), Rat(-4))));
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream bad_field("0 0\n1 x\n");
  try {
    read_points(bad_field, "pts.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.source() == "pts.txt");
  }

  std::istringstream wrong_arity("1 2 3\n");
  CHECK_THROWS_AS(read_points(wrong_arity), ParseError);

  std::istringstream degenerate("0 0 5\n");
  CHECK_THROWS_AS(read_lines(degenerate), ParseError);

  std::istringstream rational_line("1/2 1 3\n");
  CHECK_THROWS_AS(read_lines(rational_line), ParseError);
}

TEST_CASE("instance kind detection") {
  std::istringstream pts("0 1\n2 3\n");
  CHECK(read_instance(pts).kind == InstanceKind::Points);
  std::istringstream lns("1 0 0\n0 1 0\n");
  Instance inst = read_instance(lns);
  CHECK(inst.kind == InstanceKind::Lines);
  CHECK(inst.lines.size() == 2);
  std::istringstream empty("# nothing\n");
  CHECK(read_instance(empty).kind == InstanceKind::Points);
}

TEST_CASE("non-canonical line rows canonicalize on read") {
  std::istringstream in("2 2 2\n-1 0 0\n");
  LineSet l = read_lines(in);
  REQUIRE(l.size() == 2);
  CHECK(l.contains(LineKey{Int(1), Int(1), Int(1)}));
  CHECK(l.contains(LineKey{Int(1), Int(0), Int(0)}));
}

TEST_CASE("record serialization round trip") {
  SolveResult res = exact_gpss(grid(3));
  ExperimentRecord rec = make_record("grid", "m=3", 9, res, 1.25);
  CHECK(rec.opt.has_value());
  CHECK(*rec.opt == 6);

  std::string line = record_to_json_line(rec);
  ExperimentRecord back = record_from_json_line(line);
  CHECK(back.family == "grid");
  CHECK(back.params == "m=3");
  CHECK(back.n == 9);
  CHECK(back.alg == "exact");
  CHECK(back.size == 6);
  CHECK(back.bound == 6);
  CHECK(back.bound_source == "exact");
  CHECK(back.ratio_lb == Rat(1));
  CHECK(back.opt == rec.opt);
  CHECK(back.ms == 1.25);
  CHECK(back.chosen.size() == 6);

  // stable field order for byte-level determinism
  CHECK(line.find("\"family\"") < line.find("\"n\""));
  CHECK(line.find("\"n\"") < line.find("\"alg\""));
  CHECK(line.find("\"size\"") < line.find("\"bound\""));
}

TEST_CASE("records of sampling runs carry per-trial stats") {
  SamplingPlan plan = choose_k(PlanVariant::GridLike, 64, std::nullopt, Rat(1), 5);
  SolveResult res = sample_delete_gridlike(grid(8), plan, Seed{21});
  ExperimentRecord rec = make_record("grid", "m=8", 64, res, 0.5);
  CHECK_FALSE(rec.opt.has_value());
  CHECK(rec.seed.has_value());
  ExperimentRecord back = record_from_json_line(record_to_json_line(rec));
  REQUIRE(back.trials.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(back.trials[i].sample_size == rec.trials[i].sample_size);
    CHECK(back.trials[i].deletions == rec.trials[i].deletions);
    CHECK(back.trials[i].kept == rec.trials[i].kept);
  }
}

TEST_CASE("aggregate csv shape") {
  AggregateRow row;
  row.family = "bundles";
  row.params = "n=30";
  row.n = 30;
  row.alg = "sample-arrangement";
  row.runs = 3;
  row.size_median = 14;
  row.size_mean = 13.5;
  row.bound = 60;
  row.ratio_lb_median = 0.23;
  row.fitted_median = 1.03;
  row.ms_mean = 2.5;
  std::string header = aggregate_csv_header();
  std::string line = aggregate_csv_row(row);
  CHECK(std::count(header.begin(), header.end(), ',') ==
        std::count(line.begin(), line.end(), ','));
  CHECK(line.find("bundles,n=30,30,sample-arrangement,3,14,") == 0);
}

TEST_CASE("median") {
  CHECK(median({3, 1, 2}) == 2);
  CHECK(median({4, 1, 2, 3}) == 2.5);
  CHECK(median({7}) == 7);
  CHECK(median({}) == 0);
}
