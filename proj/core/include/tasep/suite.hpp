#pragma once

// Registry of verification checks and a runner. Theorem checks that fail
// make the run fail; conjecture and exploratory checks report mismatches
// without failing it.

#include "tasep/core.hpp"
#include "tasep/emit.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tasep::suite {

enum class Severity { kTheorem, kConjecture, kExploratory };
enum class Status { kProvedMatch, kConjectureMatch, kMismatch, kSkipped };

std::string to_string(Severity s);
std::string to_string(Status s);

struct RunOptions {
  int jobs = 1;
  std::uint64_t seed = 7;
  /// Checks marked long are skipped unless set.
  bool include_long = false;
  /// Monte Carlo sample count for the n = 6 correlation check.
  long mc_samples = 10'000'000;
};

struct VerificationReport {
  std::string id;
  std::string title;
  Severity severity = Severity::kTheorem;
  Status status = Status::kSkipped;
  emit::Json params = emit::Json::object();
  long checked = 0;
  long mismatches = 0;
  std::vector<std::string> witnesses;
  /// Free-form findings (observed counts, extremes, estimates).
  emit::Json details = emit::Json::object();
  double seconds = 0;

  bool failed_theorem() const { return severity == Severity::kTheorem && status == Status::kMismatch; }
};

emit::Json to_json(const VerificationReport& r);

struct CheckOutcome {
  SweepResult sweep;
  emit::Json params = emit::Json::object();
  emit::Json details = emit::Json::object();
};

struct CheckDef {
  std::string id;
  std::string title;
  Severity severity = Severity::kTheorem;
  bool long_running = false;
  std::function<CheckOutcome(const RunOptions&)> run;
};

/// All checks in declaration order.
const std::vector<CheckDef>& registry();

/// Shell-style glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

/// Ids matching the comma-separated glob list; throws std::invalid_argument
/// when a pattern matches nothing.
std::vector<std::string> select(std::string_view filter);

/// Runs the selected checks (several at a time when jobs > 1); reports come
/// back in registry order.
std::vector<VerificationReport> run_suite(std::string_view filter, const RunOptions& options);

VerificationReport run_check(const CheckDef& def, const RunOptions& options);

/// 2 if any theorem check mismatched, else 0.
int exit_code(const std::vector<VerificationReport>& reports);

/// The values tabulated for c_{i,j}(6); 0 on the diagonal.
const std::vector<std::vector<Rational>>& tabulated_correlations_n6();

}  // namespace tasep::suite
