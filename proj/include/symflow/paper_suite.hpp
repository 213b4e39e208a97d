#pragma once

#include <string>
#include <vector>

#include "symflow/tolerances.hpp"

namespace symflow {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;   // measured defect for the check
  double tolerance = 0.0;  // effective pass bar (after tightening)
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool all_pass() const;
};

// End-to-end replication of the catalog worked examples: closed-form
// critical sets, Hessian data, flow lines, adapted decompositions and the
// diagonal reduction, each checked against the independent multistart
// oracle. `filter` keeps checks whose name contains the substring;
// `tighten` divides every tolerance (tighten=100 exposes which checks are
// tolerance-limited rather than exact).
SuiteReport run_paper_suite(const std::string& filter = "",
                            double tighten = 1.0,
                            const Tolerances& tol = Tolerances::defaults());

}  // namespace symflow
