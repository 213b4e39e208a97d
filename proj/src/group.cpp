#include "symflow/group.hpp"

#include <cmath>

namespace symflow {

MembershipCheck is_in_group(const MatrixK& a, double tol) {
  const MatrixK gram = a * a.conj_transpose();
  const double defect =
      frobenius_distance(gram, MatrixK::identity(a.field(), a.n()));
  return {defect <= tol, defect};
}

MatrixK project_skew(const MatrixK& z) {
  return (z - z.conj_transpose()) * 0.5;
}

double tangency_defect(const MatrixK& a, const MatrixK& y) {
  a.require_same_shape(y, "tangency_defect");
  return (y * a.conj_transpose() + a * y.conj_transpose()).frobenius_norm();
}

bool is_tangent_at(const MatrixK& a, const MatrixK& y, double tol) {
  return tangency_defect(a, y) <= tol;
}

MatrixK project_tangent_group(const MatrixK& a, const MatrixK& z) {
  return (z - a * z.conj_transpose() * a) * 0.5;
}

double Rng::uniform() {
  // 53-bit mantissa from the top bits of the generator word.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

MatrixK random_matrix(Field f, int n, Rng& rng) {
  const int d = field_dim(f);
  MatrixK m(f, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Quat q;
      q.w = rng.normal();
      if (d > 1) q.x = rng.normal();
      if (d > 2) {
        q.y = rng.normal();
        q.z = rng.normal();
      }
      m.at(i, j) = q;
    }
  }
  return m;
}

MatrixK random_skew(Field f, int n, Rng& rng) {
  return project_skew(random_matrix(f, n, rng));
}

MatrixK random_group_element(Field f, int n, Rng& rng) {
  return mat_exp(random_skew(f, n, rng));
}

MatrixK random_group_element(Field f, int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_group_element(f, n, rng);
}

MatrixK random_tangent_group(const MatrixK& a, Rng& rng) {
  // Left translate a random Lie-algebra element: Y = S a with S skew.
  const MatrixK y = random_skew(a.field(), a.n(), rng) * a;
  const double norm = y.frobenius_norm();
  return norm > 0.0 ? y * (1.0 / norm) : y;
}

}  // namespace symflow
