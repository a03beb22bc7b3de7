#pragma once

#include <string>
#include <vector>

namespace invmaj {

struct SuiteReport {
  std::string suite;
  long long cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Exhaustive desk-scale property suites.  Case ordering is deterministic;
// sharded suites merge results in case order.
SuiteReport verify_symmetry(int max_n, int jobs = 1);
SuiteReport verify_hl_bijection(int max_n, int jobs = 1);
SuiteReport verify_hook(int max_n, int jobs = 1);
SuiteReport verify_t1(int max_n, int jobs = 1);
SuiteReport verify_cocharge(int max_n, int jobs = 1);
SuiteReport verify_codes(int max_n, int jobs = 1);
SuiteReport verify_zero_bump(int max_n, int jobs = 1);

std::vector<std::string> verify_suite_names();
SuiteReport run_verify_suite(const std::string& name, int max_n, int jobs = 1);

}  // namespace invmaj
