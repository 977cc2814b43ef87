#include "doctest.h"

#include "tasep/suite.hpp"

#include <set>

using namespace tasep;
using namespace tasep::suite;

TEST_CASE("glob matching") {
  CHECK(glob_match("fm-*", "fm-111"));
  CHECK(glob_match("*", ""));
  CHECK(glob_match("one-away-n?", "one-away-n4"));
  CHECK_FALSE(glob_match("fm-?", "fm-11"));
  CHECK_FALSE(glob_match("thm", "pw0-closed-form"));
}

TEST_CASE("registry ids are unique and selectable") {
  std::set<std::string> ids;
  for (const auto& d : registry()) CHECK(ids.insert(d.id).second);
  CHECK(select("fm-*") == std::vector<std::string>{"fm-11", "fm-21", "fm-111", "fm-1111"});
  CHECK(select("rs-k-invariance,fm-11") == std::vector<std::string>{"fm-11", "rs-k-invariance"});
  CHECK_THROWS_AS(select("nonexistent-*"), std::invalid_argument);
}

TEST_CASE("theorem checks pass and decide the exit code") {
  RunOptions o;
  const auto reports = run_suite("fm-*", o);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) CHECK(r.status == Status::kProvedMatch);
  CHECK(exit_code(reports) == 0);

  VerificationReport bad;
  bad.severity = Severity::kConjecture;
  bad.status = Status::kMismatch;
  CHECK(exit_code({bad}) == 0);
  bad.severity = Severity::kTheorem;
  CHECK(exit_code({bad}) == 2);
}

TEST_CASE("conjecture checks report conjecture-match") {
  const auto r = run_suite("conj-corr-n4", RunOptions{});
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::kConjectureMatch);
  CHECK(to_json(r[0])["status"] == "conjecture-match");
}

TEST_CASE("long checks are skipped unless requested") {
  const auto r = run_suite("laplace-n5", RunOptions{});
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::kSkipped);
}

TEST_CASE("mismatches carry witnesses") {
  const auto r = run_suite("ktasep-kN", RunOptions{});
  REQUIRE(r.size() == 1);
  CHECK(r[0].severity == Severity::kExploratory);
  if (r[0].status == Status::kMismatch) CHECK_FALSE(r[0].witnesses.empty());
}

TEST_CASE("parallel runs merge in registry order with identical results") {
  RunOptions serial, parallel;
  parallel.jobs = 3;
  const auto a = run_suite("fm-11,tl-*,rs-k-invariance,corr-closed-forms", serial);
  const auto b = run_suite("fm-11,tl-*,rs-k-invariance,corr-closed-forms", parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].checked == b[i].checked);
  }
}

TEST_CASE("tabulated n = 6 correlations are row-stochastic") {
  const auto& t = tabulated_correlations_n6();
  REQUIRE(t.size() == 6);
  for (const auto& row : t) {
    Rational s = 0;
    for (const auto& x : row) s += x;
    CHECK(s == 1);
  }
}
