#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hv {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Run the full acceptance suite (criteria 1-13).  When progress is
/// non-null, one "criterion N (name): pass|FAIL  detail" line is printed
/// per criterion as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

}  // namespace hv
