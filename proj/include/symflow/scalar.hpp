#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "symflow/errors.hpp"

namespace symflow {

// Base field (division algebra) of a matrix: reals, complexes, quaternions.
enum class Field : std::uint8_t { R, C, H };

// Real components carried by one entry: 1, 2 or 4.
int field_dim(Field f);
std::string field_name(Field f);
Field field_from_name(const std::string& s);

// Quaternion w + x i + y j + z k. Matrices over R and C use the same
// carrier with the unused components pinned to zero, which keeps every
// algebraic routine field-generic: products of C-shaped values stay
// C-shaped, products of reals stay real.
struct Quat {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quat() = default;
  constexpr Quat(double w_) : w(w_) {}
  constexpr Quat(double w_, double x_) : w(w_), x(x_) {}
  constexpr Quat(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quat i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quat j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quat k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quat conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  Quat inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw SingularMatrix("inverse of zero quaternion");
    return {w / n2, -x / n2, -y / n2, -z / n2};
  }

  constexpr Quat operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quat operator+(const Quat& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quat operator-(const Quat& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  // Hamilton product; non-commutative over H.
  constexpr Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  constexpr Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  Quat& operator+=(const Quat& o) { return *this = *this + o; }
  Quat& operator-=(const Quat& o) { return *this = *this - o; }
  Quat& operator*=(double s) { return *this = *this * s; }

  // True when the entry is representable over f.
  bool fits_field(Field f) const {
    switch (f) {
      case Field::R: return x == 0.0 && y == 0.0 && z == 0.0;
      case Field::C: return y == 0.0 && z == 0.0;
      case Field::H: return true;
    }
    return false;
  }
};

inline constexpr Quat operator*(double s, const Quat& q) { return q * s; }

// Unit phase q/|q|; identity for q = 0.
Quat unit_phase(const Quat& q);

}  // namespace symflow
