#include "symflow/catalog.hpp"

#include "symflow/errors.hpp"

namespace symflow {

std::vector<std::string> catalog_names() {
  return {"sp1_u1", "grassmann_c11", "sp2_u2", "group"};
}

bool is_catalog_name(const std::string& name) {
  for (const std::string& s : catalog_names())
    if (s == name) return true;
  return false;
}

SpaceSpec catalog_space(const std::string& name) {
  SpaceSpec spec;
  spec.name = name;
  if (name == "sp1_u1") {
    spec.field = Field::H;
    spec.n = 1;
    spec.sigma = Automorphism(MatrixK::scalar(Field::H, 1, Quat::i()), false);
    spec.model_is_whole_sigma_set = true;  // the sigma-set is the 2-sphere
    return spec;
  }
  if (name == "grassmann_c11") {
    spec.field = Field::C;
    spec.n = 2;
    spec.sigma =
        Automorphism(MatrixK::diagonal(Field::C, {Quat(1.0), Quat(-1.0)}), false);
    // The sigma-set is the model sphere plus the two isolated points
    // diag(1,-1) and diag(-1,1); diagonal reduction is therefore refused.
    spec.model_is_whole_sigma_set = false;
    return spec;
  }
  if (name == "sp2_u2") {
    spec.field = Field::H;
    spec.n = 2;
    spec.sigma = Automorphism(MatrixK::scalar(Field::H, 2, Quat::i()), false);
    spec.model_is_whole_sigma_set = true;
    return spec;
  }
  if (name == "group") {
    spec.field = Field::R;
    spec.n = 0;  // resolved against the data
    return spec;
  }
  throw InvalidInput("unknown catalog space '" + name + "'");
}

SpaceSpec resolve_space(SpaceSpec space, Field field, int n) {
  if (space.group_mode() && space.n == 0) {
    space.field = field;
    space.n = n;
    return space;
  }
  if (space.field != field || space.n != n)
    throw DimensionMismatch("space '" + space.name + "' is " +
                            field_name(space.field) + "^" + std::to_string(space.n) +
                            "x" + std::to_string(space.n) + " but the data is " +
                            field_name(field) + "^" + std::to_string(n) + "x" +
                            std::to_string(n));
  return space;
}

}  // namespace symflow
