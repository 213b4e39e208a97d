#include "symflow/tolerances.hpp"

#include <cstdlib>
#include <string>

namespace symflow {

Tolerances Tolerances::defaults() {
  Tolerances t;
  if (const char* env = std::getenv("SYMFLOW_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) t.equality = v;
    } catch (...) {
      // unparsable override: keep the ledger defaults
    }
  }
  return t;
}

}  // namespace symflow
