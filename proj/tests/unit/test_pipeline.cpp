#include <doctest.h>

#include "arset/errors.hpp"
#include "arset/pipeline.hpp"

using namespace arset;

namespace {

std::filesystem::path seed_file() {
  return std::filesystem::path(ARSET_DATA_DIR) / "c2c3.pres";
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("report layout") {
    Report r;
    r.add("a", "1");
    r.section();
    r.section();
    r.add("b", "x y");
    CHECK(r.render() == "a = 1\n\nb = x y\n");
    CHECK(*r.get("b") == "x y");
    CHECK_FALSE(r.get("c"));
    CHECK(Report{}.render().empty());
  }

  TEST_CASE("trivial word") {
    auto const res = run_pipeline(seed_file(), "x1 x1");
    auto const& r  = res.report;
    CHECK(*r.get("pw.gens") == "2");
    CHECK(*r.get("pw.rels") == "3");
    CHECK(*r.get("qw.gens") == "6");
    CHECK(*r.get("qw.rels") == "7");
    CHECK(*r.get("pw.abelianization") == "trivial");
    CHECK(*r.get("homcount.s3.qw") == *r.get("homcount.s3.pw"));
    CHECK(*r.get("wp.oracle") == "trivial");
    CHECK(*r.get("u.free_basis") == "yes");
    CHECK(*r.get("u.rank") == "5");
    CHECK(*r.get("cert.bezout") == "-1 1");
    CHECK(*r.get("collapse.bezout") == "-2 1");
    CHECK_FALSE(r.get("enum.result"));
    CHECK_FALSE(res.enumeration);
  }

  TEST_CASE("nontrivial word") {
    PipelineOptions o;
    o.targets = {TargetName::S3, TargetName::A4};
    auto const r = run_pipeline(seed_file(), "x1", o).report;
    CHECK(*r.get("wp.oracle") == "nontrivial");
    CHECK(*r.get("wp.normal_form") == "x1");
    CHECK(*r.get("pw.rels") == "3");
    CHECK(*r.get("homcount.a4.qw") == *r.get("homcount.a4.pw"));
  }

  TEST_CASE("enumeration and markov sections") {
    PipelineOptions o;
    o.enumerate  = true;
    o.max_cosets = 2000;
    o.markov     = true;
    auto const res = run_pipeline(seed_file(), "x2 x1 x1 x2^-1", o);
    auto const& r  = res.report;
    REQUIRE(res.enumeration);
    CHECK(*r.get("enum.max_cosets") == "2000");
    CHECK(*r.get("markov.stage") == "W'_P");
    CHECK(*r.get("markov.handles") == "0:1 1:2 2:3+1");
    CHECK(*r.get("markov.verdict") == "proved-trivial");
    CHECK(*r.get("markov.boundary") == "#2(S2xS2)");
    CHECK(*r.get("markov.b2") == "4");
    CHECK(*r.get("markov.slides_final") == "1 0 0");

    auto const other = run_pipeline(seed_file(), "x1 x2", o).report;
    CHECK(*other.get("markov.verdict") != "proved-trivial");
    CHECK(*other.get("markov.boundary") == "unknown");
  }

  TEST_CASE("reports are deterministic") {
    PipelineOptions o;
    o.enumerate  = true;
    o.max_cosets = 500;
    o.markov     = true;
    o.targets    = {TargetName::S3, TargetName::S4};
    CHECK(run_pipeline(seed_file(), "x1 x2 x1", o).report.render()
          == run_pipeline(seed_file(), "x1 x2 x1", o).report.render());
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(run_pipeline(std::filesystem::path("/nonexistent/seed.pres"), "x1"), InputError);
    CHECK_THROWS_AS(run_pipeline(seed_file(), "x9"), UnknownGenerator);
    CHECK_THROWS_AS(run_pipeline(parse_presentation("gens: x1 x2\nrel: x1^2\nrel: x2^4"), "x1"),
                    Condition21NotSatisfied);
    CHECK(report_word(Word{}) == "1");
  }
}
