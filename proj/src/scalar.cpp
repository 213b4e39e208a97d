#include "symflow/scalar.hpp"

namespace symflow {

int field_dim(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
  }
  return 0;
}

std::string field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

Field field_from_name(const std::string& s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  throw InvalidInput("unknown field tag '" + s + "' (expected R, C or H)");
}

Quat unit_phase(const Quat& q) {
  const double n = q.norm();
  if (n == 0.0) return Quat(1.0);
  return q * (1.0 / n);
}

}  // namespace symflow
