#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symflow/group.hpp"
#include "symflow/matrix.hpp"
#include "symflow/tolerances.hpp"

namespace symflow {

// Involutive algebra automorphism represented as sigma(X) = C op(X) C^-1,
// where op is the identity or entrywise conjugation. This single form
// covers conjugation by a diagonal involution, the quaternionic
// sigma(q) = -i q i (C = iI), and the entrywise-conjugate-then-rotate
// automorphisms of the real and complex series. Entrywise conjugation
// over H is rejected: it reverses quaternion products.
class Automorphism {
 public:
  Automorphism(MatrixK conjugator, bool entrywise_conjugation);

  Field field() const { return conjugator_.field(); }
  int n() const { return conjugator_.n(); }
  const MatrixK& conjugator() const { return conjugator_; }
  bool entrywise_conjugation() const { return entrywise_; }

  MatrixK operator()(const MatrixK& x) const;

 private:
  MatrixK conjugator_;
  MatrixK conjugator_inv_;
  bool entrywise_ = false;
};

MatrixK apply_sigma(const Automorphism& sigma, const MatrixK& x);

struct AutomorphismReport {
  double involution = 0.0;     // max |sigma(sigma(X)) - X|
  double multiplicative = 0.0; // max |sigma(XY) - sigma(X)sigma(Y)|
  double star = 0.0;           // max |sigma(X*) - sigma(X)*|
  double identity = 0.0;       // |sigma(I) - I|
  bool ok = false;
  std::string violated;        // first violated property, empty if ok
};

// Samples random matrices and checks the four defining properties.
// Throws ValidationFailure naming the violated property unless
// throw_on_failure is false, in which case the report carries it.
AutomorphismReport validate_automorphism(const Automorphism& sigma, int samples,
                                         std::uint64_t seed,
                                         double tol = 1e-9,
                                         bool throw_on_failure = true);

// Description of a catalog space or a user-supplied one. No sigma means
// pure group mode.
struct SpaceSpec {
  std::string name;
  Field field = Field::R;
  int n = 0;
  std::optional<Automorphism> sigma;
  // Whether the Cartan model fills the whole set {sigma(B) = B^-1}. The
  // diagonal-reduction route requires it. Membership tests only see that
  // set; deciding connected components is out of scope here, so the flag
  // is declared per catalog entry rather than computed.
  bool model_is_whole_sigma_set = false;

  bool group_mode() const { return !sigma.has_value(); }
};

// Membership in the Cartan model set N = {sigma(A) = A^-1}; the defect is
// |sigma(A) - A*| (on the group, A^-1 = A*).
MembershipCheck is_in_cartan_model(const Automorphism& sigma, const MatrixK& a,
                                   double tol);

// Cartan embedding B -> B sigma(B)^-1. Fixed points of sigma map to I;
// the image always satisfies the model membership test.
MatrixK cartan_embed(const Automorphism& sigma, const MatrixK& b);

// Isometric action A -> B A sigma(B)^-1; preserves the model.
MatrixK translate_model(const Automorphism& sigma, const MatrixK& b,
                        const MatrixK& a);

// Orthonormal basis of the tangent space of the model at A, i.e. of
// {Y : Y A* + A Y* = 0 and sigma(Y) = Y*}, computed as a real null space.
std::vector<MatrixK> tangent_basis_model(const Automorphism& sigma,
                                         const MatrixK& a);
// Group counterpart: only the first condition.
std::vector<MatrixK> tangent_basis_group(const MatrixK& a);

// Orthogonal projection of Z onto the model tangent space at A, written in
// closed form: average the group projection with its sigma(.)* image.
MatrixK project_tangent_model(const Automorphism& sigma, const MatrixK& a,
                              const MatrixK& z);

// Conjugated automorphism sigma'(X) = Theta sigma(X) Theta*, defined when
// sigma(Theta) = Theta*. Its model set is Theta times the original one.
Automorphism twist_automorphism(const Automorphism& sigma, const MatrixK& theta,
                                double tol = 1e-8);

// Random point of the model, generated through the Cartan embedding so it
// lands in the image component.
MatrixK random_cartan_point(const Automorphism& sigma, Rng& rng);
// Random unit tangent vector at a model point.
MatrixK random_tangent_model(const Automorphism& sigma, const MatrixK& a,
                             Rng& rng);

}  // namespace symflow
