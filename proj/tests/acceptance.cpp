// Acceptance run: every registered check (long ones included), grouped into
// the twelve acceptance criteria. One PASS/FAIL line per criterion.
//
// Exit status follows the verify command: nonzero only when a theorem check
// mismatches or a direct assertion fails. Criteria that fail on conjecture
// or exploratory checks print FAIL and leave the status at zero.

#include "tasep/continuum.hpp"
#include "tasep/parallel.hpp"
#include "tasep/rs.hpp"
#include "tasep/suite.hpp"
#include "tasep/tableaux.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace tasep;

namespace {

struct Criterion {
  int number;
  std::string summary;
  std::vector<std::string> ids;
  double budget_seconds;
  std::function<SweepResult()> direct;
};

std::vector<Criterion> criteria() {
  return {
      {1, "stationary law = MLQ counts", {"fm-11", "fm-21", "fm-111", "fm-1111"}, 60, nullptr},
      {2, "G_w0 determinant = product = enumeration", {"w0-count", "lgv-w0"}, 300, nullptr},
      {3, "G_{s_k w0} formulas, k=1,2; k=3 and (3,1) as conjectures",
       {"skw0-k1", "skw0-k2", "skw0-k3", "sw0-31"}, 300, nullptr},
      {4, "p_w0 closed form; Gelfand-Tsetlin count", {"pw0-closed-form", "gt-count"}, 3600,
       [] {
         SweepResult s;
         const auto g = tab::gt_pattern_count(3);
         s.record(g.brute == 2, "n=3 brute count " + g.brute.get_str());
         return s;
       }},
      {5, "g_w0 = n! Vandermonde; listed operator identities; n=4 sweeps",
       {"gw0-vandermonde", "op-identities", "one-away-n4", "many-away-n4"}, 600, nullptr},
      {6, "harmonic rotation classes, n=4 all, n=5 15 of 24", {"laplace-n4", "laplace-n5"}, 3 * 3600, nullptr},
      {7, "integrals of g_pi equal p_pi and sum to 1", {"consistency"}, 600, nullptr},
      {8, "two-point correlations, closed forms, n=6 Monte Carlo",
       {"conj-corr-n2", "conj-corr-n3", "conj-corr-n4", "conj-corr-n5", "corr-closed-forms", "corr-mc-n6", "syt-cn"}, 3600,
       [] {
         SweepResult s;
         const Rational c = continuum::c_n_nminus1_syt(6);
         s.record(c == make_rational(1, 33), "c_{6,5} from SYT = " + to_string(c));
         return s;
       }},
      {9, "initial words, F_w routes, bijection example, SSYT routes",
       {"prefix-prob", "fw-routes", "bij-example", "ssyt-routes"}, 600, nullptr},
      {10, "last-row map fixes the stationary law", {"last-row"}, 600, nullptr},
      {11, "k-TASEP invariance for k = 1..N", {"ktasep", "ktasep-kN"}, 600, nullptr},
      {12, "Temperley-Lieb relations, generator example, k-RS invariance",
       {"tl-relations", "tl-example", "rs-k-invariance"}, 600,
       [] {
         SweepResult s;
         const auto n = rs::enumerate_patterns(4).size();
         s.record(n == 14, "|Omega_4| = " + std::to_string(n));
         return s;
       }},
  };
}

}  // namespace

int main() {
  suite::RunOptions options;
  options.include_long = true;
  options.jobs = default_jobs();
  if (const char* j = std::getenv("TASEPKIT_JOBS")) options.jobs = std::max(1, std::atoi(j));

  const auto reports = suite::run_suite("*", options);
  std::map<std::string, const suite::VerificationReport*> by_id;
  for (const auto& r : reports) by_id[r.id] = &r;

  int passed = 0;
  bool direct_failure = false;
  for (const auto& c : criteria()) {
    bool ok = true;
    double seconds = 0;
    std::string notes;
    for (const auto& id : c.ids) {
      const auto* r = by_id.at(id);
      seconds += r->seconds;
      const bool good = r->status == suite::Status::kProvedMatch || r->status == suite::Status::kConjectureMatch;
      ok = ok && good;
      notes += "\n    " + id + " [" + suite::to_string(r->severity) + "] " + suite::to_string(r->status) + " " +
               std::to_string(r->checked - r->mismatches) + "/" + std::to_string(r->checked);
      for (const auto& w : r->witnesses) notes += "\n      " + w;
    }
    if (c.direct) {
      const auto s = c.direct();
      ok = ok && s.ok();
      direct_failure = direct_failure || !s.ok();
      notes += "\n    direct " + std::to_string(s.checked - s.mismatches) + "/" + std::to_string(s.checked);
      for (const auto& w : s.witnesses) notes += "\n      " + w;
    }
    if (seconds > c.budget_seconds) {
      ok = false;
      notes += "\n    over budget";
    }
    passed += ok;
    std::printf("criterion %2d: %s  %s (%.1fs)%s\n", c.number, ok ? "PASS" : "FAIL", c.summary.c_str(), seconds,
                notes.c_str());
  }
  std::printf("%d of 12 criteria pass\n", passed);
  const int rc = suite::exit_code(reports);
  return rc != 0 ? rc : (direct_failure ? 1 : 0);
}
