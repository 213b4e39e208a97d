#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symflow/symmetric_space.hpp"

namespace symflow {

// One height-maximization problem: direction X on the group (group mode)
// or on a Cartan model (model mode). All first- and second-order formulas
// share a single code path through the effective direction
//   yhat = X* + sigma(X)  (model)   or   yhat = 2 X*  (group),
// which in both cases satisfies sigma(yhat) = yhat*, so the formulas only
// ever consume yhat and its conjugate transpose.
struct HeightProblem {
  std::optional<Automorphism> sigma;
  MatrixK x;
  MatrixK yhat;

  static HeightProblem group(MatrixK x);
  static HeightProblem model(Automorphism sigma, MatrixK x);

  bool group_mode() const { return !sigma.has_value(); }
  double scale() const { return yhat.frobenius_norm(); }
};

// Height h_X(A) = Re Tr(X A).
double height(const MatrixK& x, const MatrixK& a);

// X* + sigma(X); checks sigma(xhat) = xhat*.
MatrixK xhat(const Automorphism& sigma, const MatrixK& x);

// Riemannian gradients. Both are the orthogonal projection of the ambient
// gradient X* onto the tangent space at A.
MatrixK grad_group(const MatrixK& x, const MatrixK& a);   // (X* - A X A)/2
MatrixK grad_model(const Automorphism& sigma, const MatrixK& x,
                   const MatrixK& a);                     // (xhat - A sigma(xhat) A)/4
MatrixK gradient(const HeightProblem& p, const MatrixK& a);

// Hessian operator applied to a tangent vector W at A.
MatrixK hessian_model(const Automorphism& sigma, const MatrixK& x,
                      const MatrixK& a, const MatrixK& w);
MatrixK hessian_apply(const HeightProblem& p, const MatrixK& a, const MatrixK& w);

// Tangent machinery dispatched on the mode.
std::vector<MatrixK> tangent_basis(const HeightProblem& p, const MatrixK& a);
MatrixK tangent_project(const HeightProblem& p, const MatrixK& a, const MatrixK& z);

struct CriticalCheck {
  bool ok = false;
  double residual = 0.0;
};

// Criticality on the group: |X* - A X A| <= tol.
CriticalCheck is_critical_group(const MatrixK& x, const MatrixK& a, double tol);
// Criticality on the model: |xhat - A sigma(xhat) A| <= tol. Agrees with
// |grad_model| <= tol/4 by construction.
CriticalCheck is_critical_model(const Automorphism& sigma, const MatrixK& x,
                                const MatrixK& a, double tol);
CriticalCheck is_critical(const HeightProblem& p, const MatrixK& a, double tol);
// Default criticality threshold for this problem.
double critical_tolerance(const HeightProblem& p, const Tolerances& tol);

struct CriticalPointRecord {
  MatrixK point;
  double value = 0.0;
  double residual = 0.0;  // Frobenius norm of the Riemannian gradient
  std::vector<double> hessian_eigenvalues;  // ascending
  int kernel_dim = 0;
  bool morse = false;
  int cluster_size = 1;  // oracle metadata: converged starts merged here
};

// Spectrum of the Hessian in an orthonormal tangent basis at A. The
// operator is self-adjoint, so the spectrum is real; kernel_dim counts
// eigenvalues below the kernel-gap threshold. Works at any point; the
// residual field tells the caller how critical A actually is.
CriticalPointRecord hessian_spectrum(const HeightProblem& p, const MatrixK& a,
                                     const Tolerances& tol = Tolerances::defaults());

struct InclusionReport {
  bool cor_group_in_model = true;   // group-critical points in the model are model-critical
  bool cor_model_via_sigma = true;  // model-critical points solve the sigma(xhat) group equation
  bool star_compatible = false;     // sigma(X) = X*, the regime where both sets agree
  bool cor_equality = true;         // under star compatibility: model-critical implies group-critical
  double worst_residual = 0.0;
  std::string detail;
};

// Verifies the critical-set relations on supplied candidate lists. Throws
// RelationViolated naming the failing inclusion and point index.
InclusionReport critical_inclusion_check(const Automorphism& sigma, const MatrixK& x,
                                         const std::vector<MatrixK>& group_points,
                                         const std::vector<MatrixK>& model_points,
                                         double tol);

// Critical value determined by a sign pattern on the repeated-singular-
// value blocks of a canonical diagonal: sum_i t_i * sum_j eps_i^j. The
// all-plus pattern is the global maximum sum_i n_i t_i.
double critical_value_from_signs(const std::vector<double>& values,
                                 const std::vector<std::vector<int>>& signs);

// Gauss-Newton refinement of a near-critical point. Minimizes the stacked
// residual [gradient; manifold defects] in ambient coordinates with
// minimum-norm steps, so it converges onto positive-dimensional critical
// manifolds without wandering along them. Quadratic once the start is in
// the basin (coarse ascent output is). Throws NonConvergence if the
// residual does not drop below target.
MatrixK polish_critical(const HeightProblem& p, MatrixK a,
                        double target_residual = -1.0, int max_iters = 12,
                        const Tolerances& tol = Tolerances::defaults());

}  // namespace symflow
