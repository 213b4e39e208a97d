#pragma once

#include <vector>

#include "symflow/height.hpp"

namespace symflow {

// Domain of the Cayley chart centered at A: matrices X with A + X
// invertible.
bool in_omega(const MatrixK& a, const MatrixK& x,
              const Tolerances& tol = Tolerances::defaults());

// Generalized Cayley transform c_A(X) = (I - A*X)(A + X)^-1, a
// diffeomorphism from the chart at A onto the chart at A*, with inverse
// c_{A*}. Maps group elements near A to tangent vectors at A* and, when A
// lies in a Cartan model, model points to model tangent vectors.
MatrixK cayley(const MatrixK& a, const MatrixK& x,
               const Tolerances& tol = Tolerances::defaults());

// Residual of the equivariance c_{sigma(A)}(sigma(X)) = sigma(c_A(X)).
double sigma_commutation_check(const Automorphism& sigma, const MatrixK& a,
                               const MatrixK& x,
                               const Tolerances& tol = Tolerances::defaults());

// Contraction nu(X, t) = c_{A*}(t c_A(X)) of the chart at A onto A;
// stays in the model for model inputs.
MatrixK contraction(const MatrixK& a, const MatrixK& x, double t,
                    const Tolerances& tol = Tolerances::defaults());

// Retraction with exact first-order behavior: moves from A along the
// tangent vector Y through the Cayley chart at A*, with
// d/dt retract(A, tY)|_0 = Y. Model tangents stay on the model.
MatrixK cayley_retract(const MatrixK& a, const MatrixK& y,
                       const Tolerances& tol = Tolerances::defaults());

// Closed-form solution of the ascent equation 4 a' = yhat - a yhat* a
// through a critical center: the Cayley image of a linear matrix flow.
//   alpha(t) = A (sinh(G) + cosh(G) A* a0)(cosh(G) + sinh(G) A* a0)^-1,
// with G = (t/4) A* yhat. Throws NotCriticalCenter if the center fails the
// criticality test, OutsideDomain if a0 is not in the chart at the center,
// and SingularEvaluation when the denominator degenerates at the
// requested time.
MatrixK flow_closed_form(const HeightProblem& p, const MatrixK& center,
                         const MatrixK& alpha0, double t,
                         const Tolerances& tol = Tolerances::defaults());

// Same flow through the chart: beta(t) = exp(-t/4 A*yhat) b0 exp(-t/4 yhat A*)
// followed by the inverse Cayley map. Retained as an internal cross-check
// of the direct formula; one extra inversion.
MatrixK flow_closed_form_via_chart(const HeightProblem& p, const MatrixK& center,
                                   const MatrixK& alpha0, double t,
                                   const Tolerances& tol = Tolerances::defaults());

// The linear chart curve itself; stays in the tangent space at center*.
MatrixK flow_chart_curve(const HeightProblem& p, const MatrixK& center,
                         const MatrixK& alpha0, double t,
                         const Tolerances& tol = Tolerances::defaults());

struct FlowTrace {
  std::vector<double> times;
  std::vector<MatrixK> points;
  std::vector<double> heights;
  std::vector<double> grad_norms;
  std::vector<double> model_defects;

  void push(double t, const MatrixK& a, const HeightProblem& p);
};

// Fixed-step RK4 on the ambient ascent equation with re-projection of each
// iterate onto the group (polar factor). The sigma-condition is measured
// and recorded, never enforced: the exact flow stays on the model, so a
// growing defect indicates a bug rather than something to hide. Throws
// StepRejected when the pre-projection unitarity defect passes 1e-3.
FlowTrace flow_numeric(const HeightProblem& p, const MatrixK& alpha0, double t0,
                       double t1, int samples, double step = 1e-3,
                       const Tolerances& tol = Tolerances::defaults());

// Closed-form trace sampled on a uniform grid.
FlowTrace flow_closed_trace(const HeightProblem& p, const MatrixK& center,
                            const MatrixK& alpha0, double t0, double t1,
                            int samples,
                            const Tolerances& tol = Tolerances::defaults());

// Integrates the group flow 2 a' = X* - a X a from a model start and
// reports the model defect over time. For sigma(X) = X* the group flow is
// tangent to the model and the defect stays at solver noise; generically
// it grows.
FlowTrace flow_transversality_demo(const Automorphism& sigma, const MatrixK& x,
                                   const MatrixK& alpha0, double t1 = 2.0,
                                   int samples = 41,
                                   const Tolerances& tol = Tolerances::defaults());

struct ChartSpace {
  MatrixK base;                // the critical center A
  std::vector<MatrixK> basis;  // orthonormal basis of the chart directions
  int dim() const { return static_cast<int>(basis.size()); }
};

// Linear parameter space of the critical submanifold through a critical
// point A: tangent vectors b at A* with A* yhat b + b yhat A* = 0. Its
// dimension equals the Hessian kernel dimension at A. Throws NotCritical.
ChartSpace chart_space(const HeightProblem& p, const MatrixK& a,
                       const Tolerances& tol = Tolerances::defaults());

// Maps a chart parameter to a critical point: the inverse Cayley image
// c_{A*}(beta0). beta0 = 0 returns A itself.
MatrixK chart_to_critical(const HeightProblem& p, const MatrixK& a,
                          const MatrixK& beta0,
                          const Tolerances& tol = Tolerances::defaults());

}  // namespace symflow
