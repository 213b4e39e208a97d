#pragma once

#include <string>
#include <vector>

#include "symflow/symmetric_space.hpp"

namespace symflow {

// Built-in spaces exercised throughout the test and acceptance suites:
//   sp1_u1        Sp(1)/U(1): quaternionic 1x1 with sigma(q) = -i q i.
//   grassmann_c11 U(2)/(U(1)xU(1)): complex 2x2 with sigma(A) = E A E,
//                 E = diag(1,-1). Its sigma-set has two extra isolated
//                 points outside the model, so the reduction flag is off.
//   sp2_u2        Sp(2)/U(2): quaternionic 2x2 with sigma(A) = -i A i.
//   group         Pure group mode; field and dimension adapt to the data.
std::vector<std::string> catalog_names();

bool is_catalog_name(const std::string& name);

// Fetch by catalog name; throws InvalidInput for unknown names. The
// "group" entry carries no automorphism and zero dimension until resolved.
SpaceSpec catalog_space(const std::string& name);

// Resolve a group-mode space against concrete data dimensions.
SpaceSpec resolve_space(SpaceSpec space, Field field, int n);

}  // namespace symflow
