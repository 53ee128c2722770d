#include <doctest.h>

#include "altk/censusgen.hpp"
#include "altk/errors.hpp"
#include "altk/harness.hpp"

using namespace altk;

namespace {
const char* kSmallCensus =
    "# demo census\n"
    "tref ; pd ; X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n"
    "fig8 ; braid ; 3 ; 1 -2 1 -2\n"
    "t25 ; braid ; 2 ; 1 1 1 1 1\n"
    "hopf ; braid ; 2 ; 1 1\n";
}  // namespace

TEST_CASE("census parsing") {
  auto entries = parse_census(kSmallCensus);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].name == "tref");
  CHECK(entries[0].kind == "pd");
  CHECK(entries[1].kind == "braid");
  CHECK(entries[1].payload == "3 ; 1 -2 1 -2");

  CHECK_THROWS_AS(parse_census("bad line\n"), parse_error);
  CHECK_THROWS_AS(parse_census("a ; pd ; X(1,2,3,4)\na ; pd ; X(1,2,3,4)\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_census("x ; dt ; 4 6 2\n"), parse_error);
}

TEST_CASE("entry evaluation fills the report") {
  CensusOptions opt;
  auto entries = parse_census(kSmallCensus);
  LinkReport r = evaluate_entry(entries[0], opt);
  CHECK(r.error.empty());
  CHECK(r.crossings == 3);
  CHECK(r.components == 1);
  CHECK(r.coeffs == std::vector<Int>{1, 1, 1});
  REQUIRE(r.sigma.has_value());
  CHECK(std::abs(*r.sigma) == 2);
  REQUIRE(r.trapezoidal.has_value());
  CHECK(r.trapezoidal->holds);
  REQUIRE(r.hm.has_value());
  CHECK(r.hm->holds);
  CHECK(r.hm->sharp);
  REQUIRE(r.mt.has_value());
  CHECK(*r.mt == 3);
  REQUIRE(r.pieces.has_value());
  CHECK(*r.pieces == 1);
  CHECK(r.violations().empty());
}

TEST_CASE("non-alternating entries are flagged, not fatal") {
  CensusOptions opt;
  CensusRun run = run_census_text(
      "good ; pd ; X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n"
      "tor34 ; braid ; 3 ; 1 2 1 2 1 2 1 2\n",
      opt, "json");
  CHECK(run.exit_code == 0);
  REQUIRE(run.reports.size() == 2);
  CHECK(run.reports[1].error.empty());
  CHECK_FALSE(run.reports[1].alternating);
  REQUIRE(!run.reports[1].notes.empty());
  CHECK(run.reports[1].notes[0] == "precondition: not alternating");
  CHECK_FALSE(run.reports[1].trapezoidal.has_value());
}

TEST_CASE("missing file yields exit code 2") {
  CensusOptions opt;
  CensusRun run = run_census("/nonexistent/census.txt", opt, "json");
  CHECK(run.exit_code == 2);
}

TEST_CASE("parse failures yield exit code 2") {
  CensusOptions opt;
  CensusRun run = run_census_text("broken\n", opt, "json");
  CHECK(run.exit_code == 2);
}

TEST_CASE("serial and parallel sweeps produce identical reports") {
  auto entries = parse_census(kSmallCensus);
  CensusOptions opt;
  opt.jobs = 1;
  auto serial = run_entries_serial(entries, opt);
  CensusOptions opt8 = opt;
  opt8.jobs = 8;
  auto parallel = run_entries_parallel(entries, opt8);
  CHECK(render_reports_json(serial, false) ==
        render_reports_json(parallel, false));
  CHECK(render_reports_csv(serial) == render_reports_csv(parallel));
}

TEST_CASE("checks subset is honored") {
  CensusOptions opt;
  opt.checks = {"fox"};
  auto entries = parse_census(kSmallCensus);
  LinkReport r = evaluate_entry(entries[0], opt);
  CHECK(r.trapezoidal.has_value());
  CHECK_FALSE(r.hm.has_value());
  CHECK_FALSE(r.mt.has_value());
  CHECK_FALSE(r.pieces.has_value());
}

TEST_CASE("violations surface in the dump") {
  LinkReport r;
  r.name = "synthetic";
  r.alternating = true;
  r.signs_alternate = true;
  r.palindromic = true;
  TrapezoidReport t;
  t.holds = false;
  t.fail_index = 2;
  t.fail_clause = 2;
  r.trapezoidal = t;
  auto v = r.violations();
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("trapezoidal") != std::string::npos);
  std::vector<LinkReport> rs = {r};
  std::string dump = render_violations_json(rs);
  CHECK(dump.find("synthetic") != std::string::npos);
}

TEST_CASE("generated census entries all parse and are alternating knots") {
  auto entries = generate_alternating_knot_census(7, 4);
  CHECK(entries.size() >= 10);
  CensusOptions opt;
  opt.checks = {"fox"};
  for (const CensusEntry& e : entries) {
    LinkReport r = evaluate_entry(e, opt);
    CAPTURE(e.name);
    CHECK(r.error.empty());
    CHECK(r.alternating);
    CHECK(r.reduced);
    CHECK(r.components == 1);
    CHECK(r.crossings <= 7);
  }
}
