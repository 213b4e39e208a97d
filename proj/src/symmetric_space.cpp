#include "symflow/symmetric_space.hpp"

#include <algorithm>
#include <cmath>

#include "symflow/errors.hpp"
#include "symflow/linalg.hpp"

namespace symflow {

Automorphism::Automorphism(MatrixK conjugator, bool entrywise_conjugation)
    : conjugator_(std::move(conjugator)), entrywise_(entrywise_conjugation) {
  if (entrywise_ && conjugator_.field() == Field::H)
    throw IncompatibleAutomorphism(
        "entrywise conjugation over H reverses products and cannot define an "
        "algebra automorphism");
  conjugator_inv_ = mat_inverse(conjugator_);
}

MatrixK Automorphism::operator()(const MatrixK& x) const {
  x.require_same_shape(conjugator_, "apply_sigma");
  const MatrixK& mid = x;
  return entrywise_ ? conjugator_ * mid.entrywise_conj() * conjugator_inv_
                    : conjugator_ * mid * conjugator_inv_;
}

MatrixK apply_sigma(const Automorphism& sigma, const MatrixK& x) {
  return sigma(x);
}

AutomorphismReport validate_automorphism(const Automorphism& sigma, int samples,
                                         std::uint64_t seed, double tol,
                                         bool throw_on_failure) {
  Rng rng(seed);
  const Field f = sigma.field();
  const int n = sigma.n();
  AutomorphismReport rep;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    const MatrixK x = random_matrix(f, n, rng);
    const MatrixK y = random_matrix(f, n, rng);
    rep.involution = std::max(rep.involution, frobenius_distance(sigma(sigma(x)), x));
    rep.multiplicative =
        std::max(rep.multiplicative, frobenius_distance(sigma(x * y), sigma(x) * sigma(y)));
    rep.star = std::max(rep.star,
                        frobenius_distance(sigma(x.conj_transpose()), sigma(x).conj_transpose()));
  }
  rep.identity = frobenius_distance(sigma(MatrixK::identity(f, n)),
                                    MatrixK::identity(f, n));
  // Residuals scale with the sampled matrices; normalize the pass bar.
  const double scale = std::max(1.0, static_cast<double>(n));
  if (rep.involution > tol * scale) rep.violated = "involution";
  else if (rep.multiplicative > tol * scale * scale) rep.violated = "multiplicative";
  else if (rep.star > tol * scale) rep.violated = "star-compatibility";
  else if (rep.identity > tol) rep.violated = "identity";
  rep.ok = rep.violated.empty();
  if (!rep.ok && throw_on_failure)
    throw ValidationFailure("automorphism fails the " + rep.violated +
                            " property");
  return rep;
}

MembershipCheck is_in_cartan_model(const Automorphism& sigma, const MatrixK& a,
                                   double tol) {
  const double defect = frobenius_distance(sigma(a), a.conj_transpose());
  return {defect <= tol, defect};
}

MatrixK cartan_embed(const Automorphism& sigma, const MatrixK& b) {
  return b * mat_inverse(sigma(b));
}

MatrixK translate_model(const Automorphism& sigma, const MatrixK& b,
                        const MatrixK& a) {
  return b * a * mat_inverse(sigma(b));
}

std::vector<MatrixK> tangent_basis_model(const Automorphism& sigma,
                                         const MatrixK& a) {
  const MatrixK astar = a.conj_transpose();
  std::vector<std::function<MatrixK(const MatrixK&)>> constraints;
  constraints.emplace_back([astar, a](const MatrixK& y) {
    return y * astar + a * y.conj_transpose();
  });
  constraints.emplace_back(
      [&sigma](const MatrixK& y) { return sigma(y) - y.conj_transpose(); });
  return real_null_space(a.field(), a.n(), constraints);
}

std::vector<MatrixK> tangent_basis_group(const MatrixK& a) {
  const MatrixK astar = a.conj_transpose();
  std::vector<std::function<MatrixK(const MatrixK&)>> constraints;
  constraints.emplace_back([astar, a](const MatrixK& y) {
    return y * astar + a * y.conj_transpose();
  });
  return real_null_space(a.field(), a.n(), constraints);
}

MatrixK project_tangent_model(const Automorphism& sigma, const MatrixK& a,
                              const MatrixK& z) {
  // The map Y -> sigma(Y)* is an isometric involution preserving the group
  // tangent space at model points; its +1 eigenspace cut with the group
  // tangent space is the model tangent space.
  const MatrixK g = project_tangent_group(a, z);
  return (g + sigma(g).conj_transpose()) * 0.5;
}

Automorphism twist_automorphism(const Automorphism& sigma, const MatrixK& theta,
                                double tol) {
  const double defect =
      frobenius_distance(sigma(theta), theta.conj_transpose());
  if (defect > tol)
    throw HypothesisViolated(
        "twist_automorphism requires sigma(Theta) = Theta*, defect " +
        std::to_string(defect));
  const MembershipCheck unitary = is_in_group(theta, tol);
  if (!unitary.ok)
    throw HypothesisViolated("twist_automorphism requires Theta in the group, defect " +
                             std::to_string(unitary.defect));
  // Theta (C op(X) C^-1) Theta* collapses to conjugation by Theta C.
  return Automorphism(theta * sigma.conjugator(), sigma.entrywise_conjugation());
}

MatrixK random_cartan_point(const Automorphism& sigma, Rng& rng) {
  return cartan_embed(sigma, random_group_element(sigma.field(), sigma.n(), rng));
}

MatrixK random_tangent_model(const Automorphism& sigma, const MatrixK& a,
                             Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const MatrixK y =
        project_tangent_model(sigma, a, random_matrix(a.field(), a.n(), rng));
    const double norm = y.frobenius_norm();
    if (norm > 1e-8) return y * (1.0 / norm);
  }
  throw NonConvergence("could not sample a nonzero model tangent vector");
}

}  // namespace symflow
