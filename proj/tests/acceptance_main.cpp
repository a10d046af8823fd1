// Acceptance gate: one line per numbered criterion, sourced from the check
// suite. Run with a number to execute a single criterion (the ctest entries
// do that so failures are attributable); no argument runs all eleven.

#include <cstdio>
#include <cstdlib>
#include <utility>

#include "pdr/verify.hpp"

int main(int argc, char** argv) {
  const std::pair<int, const char*> criteria[] = {
      {1, "FAMILY_NUMBERS"},      {2, "GN_THEOREM"},
      {3, "TAR_STRUCTURE"},       {4, "KAB_THRESHOLDS"},
      {5, "MINIMAL_CENSUS"},      {6, "OLPD_CLASSIFICATION"},
      {7, "TAR_UNIQUENESS"},      {8, "TJ_REALIZATIONS"},
      {9, "TJ_DISCONNECTED"},     {10, "FRAMEWORK_PROPERTIES"},
      {11, "TAR_ORACLE_EQUIVALENCE"},
  };
  int want = argc > 1 ? std::atoi(argv[1]) : 0;
  if (want < 0 || want > 11) {
    std::fprintf(stderr, "usage: %s [1..11]\n", argv[0]);
    return 2;
  }
  bool bad = false;
  for (auto [num, id] : criteria) {
    if (want && num != want) continue;
    pdr::SuiteOptions opt;
    opt.only = {id};
    pdr::CheckResult r = pdr::run_suite(opt).front();
    bool pass = r.status == pdr::CheckStatus::Pass;
    std::printf("criterion %2d [%s]: %s (%.0f ms)\n", num, id,
                pass ? "PASS" : "FAIL", r.ms);
    if (!pass) {
      std::printf("  observed: %s\n  expected: %s\n", r.observed.c_str(),
                  r.expected.c_str());
      if (!r.note.empty()) std::printf("  note: %s\n", r.note.c_str());
      bad = true;
    }
    std::fflush(stdout);
  }
  return bad ? 1 : 0;
}
