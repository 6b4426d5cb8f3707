#ifndef POLYHARM_SELFCHECK_HPP
#define POLYHARM_SELFCHECK_HPP

#include <string>
#include <vector>

#include "polyharm/bigfloat.hpp"

namespace polyharm {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string summary() const;
};

struct SelfCheckReport {
  std::vector<CriterionResult> criteria;
  std::vector<std::string> warnings;
  bool pass() const {
    for (const auto& c : criteria)
      if (!c.pass()) return false;
    return true;
  }
};

// The full reproduction suite: certified critical roots, the coefficient
// oracle grid, solution-space dimensions, generator identities, the exact
// sequence, radical identities, spot numerics, mean value verification, and
// the critical truth table. Precision below 128 bits is raised where the
// identity tolerances need it, with a warning rather than a failure.
SelfCheckReport run_selfcheck(mpfr_prec_t precision = 128);

}  // namespace polyharm

#endif
