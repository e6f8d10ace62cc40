#pragma once

// The acceptance suites: each criterion runs at its pinned tolerance and
// reports one pass/fail line. The CLI `verify` subcommand and the acceptance
// test binary both run these.

#include <iosfwd>
#include <string>
#include <vector>

namespace polyfaces {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

// suite: all | posets | fibers | charts
std::vector<CriterionResult> run_acceptance_suite(const std::string& suite);

// prints "PASS criterion k: name — detail" per entry; returns true iff all pass
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace polyfaces
