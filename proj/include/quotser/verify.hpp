#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace quotser {

struct CaseResult {
  bool pass = false;
  std::string detail;
};

// One self-contained verification case.  `reference` states the closed form
// or independent computation the case checks against, and is printed next to
// the PASS/FAIL verdict.
struct VerificationCase {
  std::string name;
  std::string reference;
  std::function<CaseResult()> run;
};

const std::vector<VerificationCase>& acceptance_cases();

// Runs every case whose name contains `filter` (all cases when empty),
// printing one verdict line per case.  Returns 0 iff all selected cases
// pass; exceptions escaping a case are reported as failures.
int run_verification(const std::string& filter, std::ostream& os);

}  // namespace quotser
