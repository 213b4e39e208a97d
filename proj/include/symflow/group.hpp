#pragma once

#include <cstdint>
#include <random>

#include "symflow/linalg.hpp"
#include "symflow/matrix.hpp"

namespace symflow {

struct MembershipCheck {
  bool ok = false;
  double defect = 0.0;
};

// Membership in O(n,K): |A A* - I| <= tol.
MembershipCheck is_in_group(const MatrixK& a, double tol);

// Skew-Hermitian part (Z - Z*)/2: the orthogonal projection of Z onto the
// Lie algebra. Idempotent and self-adjoint for re_trace_inner.
MatrixK project_skew(const MatrixK& z);

// Tangency at a group element a: |Y a* + a Y*| <= tol.
double tangency_defect(const MatrixK& a, const MatrixK& y);
bool is_tangent_at(const MatrixK& a, const MatrixK& y, double tol);

// Orthogonal projection of Z onto the tangent space at a: (Z - a Z* a)/2.
MatrixK project_tangent_group(const MatrixK& a, const MatrixK& z);

// Deterministic random source. Box-Muller on top of mt19937_64 keeps the
// stream identical across standard libraries, which the replay contract
// needs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform();  // [0, 1)
  double normal();
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Gaussian matrix with independent components in the allowed slots.
MatrixK random_matrix(Field f, int n, Rng& rng);
MatrixK random_skew(Field f, int n, Rng& rng);
// exp of a random skew matrix: always lands in the identity component.
MatrixK random_group_element(Field f, int n, Rng& rng);
MatrixK random_group_element(Field f, int n, std::uint64_t seed);
// Random tangent vector at a, unit Frobenius norm.
MatrixK random_tangent_group(const MatrixK& a, Rng& rng);

}  // namespace symflow
