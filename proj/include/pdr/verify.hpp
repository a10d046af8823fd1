#ifndef PDR_VERIFY_HPP
#define PDR_VERIFY_HPP

#include <string>
#include <vector>

#include "pdr/core.hpp"

namespace pdr {

enum class CheckStatus { Pass, Fail, Skipped };

// One executed check. `basis` says where the expected value comes from:
// "pinned" (constant frozen in this file), "recomputed" (brute-force oracle
// run inline by the check), or "definition" (true by construction).
struct CheckResult {
  std::string id;
  int criterion = 0;  // 1..11; 0 for supplementary checks
  CheckStatus status = CheckStatus::Fail;
  std::string observed;
  std::string expected;
  std::string basis;
  std::string note;
  double ms = 0.0;
};

struct SuiteOptions {
  std::vector<std::string> only;  // empty = whole suite
  double budget_sec = 0.0;        // per-check soft limit; 0 = unlimited
};

// registered ids in execution (sorted) order
std::vector<std::string> check_ids();

// runs checks serially in sorted id order; unknown ids throw UnknownCheckId.
// A check that passes but overruns the budget is downgraded to skipped;
// failures are always reported as failures.
std::vector<CheckResult> run_suite(const SuiteOptions& opt = {});

const char* status_name(CheckStatus s);
bool all_passed(const std::vector<CheckResult>& results);

std::string report_table(const std::vector<CheckResult>& results);
std::string report_jsonl(const std::vector<CheckResult>& results);

}  // namespace pdr

#endif
