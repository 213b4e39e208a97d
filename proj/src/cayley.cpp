#include "symflow/cayley.hpp"

#include <algorithm>
#include <cmath>

#include "symflow/errors.hpp"
#include "symflow/linalg.hpp"

namespace symflow {

bool in_omega(const MatrixK& a, const MatrixK& x, const Tolerances& tol) {
  a.require_same_shape(x, "in_omega");
  const MatrixK sum = a + x;
  const double cutoff = tol.singularity * std::max(1.0, sum.frobenius_norm());
  return smallest_singular_value(sum) > cutoff;
}

MatrixK cayley(const MatrixK& a, const MatrixK& x, const Tolerances& tol) {
  if (!in_omega(a, x, tol))
    throw OutsideDomain("cayley: A + X is singular");
  const MatrixK inv = mat_inverse(a + x, tol);
  return (MatrixK::identity(a.field(), a.n()) - a.conj_transpose() * x) * inv;
}

double sigma_commutation_check(const Automorphism& sigma, const MatrixK& a,
                               const MatrixK& x, const Tolerances& tol) {
  return frobenius_distance(cayley(sigma(a), sigma(x), tol), sigma(cayley(a, x, tol)));
}

MatrixK contraction(const MatrixK& a, const MatrixK& x, double t,
                    const Tolerances& tol) {
  return cayley(a.conj_transpose(), cayley(a, x, tol) * t, tol);
}

MatrixK cayley_retract(const MatrixK& a, const MatrixK& y, const Tolerances& tol) {
  // c_{A*}(Y*/2) has derivative exactly Y at 0 for tangent Y.
  return cayley(a.conj_transpose(), y.conj_transpose() * 0.5, tol);
}

namespace {

void require_center(const HeightProblem& p, const MatrixK& center,
                    const MatrixK& alpha0, const Tolerances& tol) {
  const CriticalCheck c = is_critical(p, center, critical_tolerance(p, tol));
  if (!c.ok)
    throw NotCriticalCenter("flow center has criticality residual " +
                            std::to_string(c.residual));
  if (!in_omega(center, alpha0, tol))
    throw OutsideDomain("initial point is outside the chart at the center");
}

}  // namespace

MatrixK flow_closed_form(const HeightProblem& p, const MatrixK& center,
                         const MatrixK& alpha0, double t, const Tolerances& tol) {
  require_center(p, center, alpha0, tol);
  const MatrixK astar = center.conj_transpose();
  const MatrixK g = astar * p.yhat * (t / 4.0);
  const MatrixK sh = mat_analytic(g, AnalyticFn::Sinh, tol);
  const MatrixK ch = mat_analytic(g, AnalyticFn::Cosh, tol);
  const MatrixK k = astar * alpha0;
  const MatrixK den = ch + sh * k;
  MatrixK den_inv;
  try {
    den_inv = mat_inverse(den, tol);
  } catch (const SingularMatrix&) {
    throw SingularEvaluation("closed-form flow degenerates at t = " +
                             std::to_string(t) + "; switch charts");
  }
  return center * (sh + ch * k) * den_inv;
}

MatrixK flow_chart_curve(const HeightProblem& p, const MatrixK& center,
                         const MatrixK& alpha0, double t, const Tolerances& tol) {
  require_center(p, center, alpha0, tol);
  const MatrixK astar = center.conj_transpose();
  const MatrixK beta0 = cayley(center, alpha0, tol);
  const MatrixK left = mat_exp(astar * p.yhat * (-t / 4.0), tol);
  const MatrixK right = mat_exp(p.yhat * astar * (-t / 4.0), tol);
  return left * beta0 * right;
}

MatrixK flow_closed_form_via_chart(const HeightProblem& p, const MatrixK& center,
                                   const MatrixK& alpha0, double t,
                                   const Tolerances& tol) {
  const MatrixK beta = flow_chart_curve(p, center, alpha0, t, tol);
  try {
    return cayley(center.conj_transpose(), beta, tol);
  } catch (const OutsideDomain&) {
    throw SingularEvaluation("chart-route flow degenerates at t = " +
                             std::to_string(t) + "; switch charts");
  }
}

void FlowTrace::push(double t, const MatrixK& a, const HeightProblem& p) {
  times.push_back(t);
  points.push_back(a);
  heights.push_back(height(p.x, a));
  grad_norms.push_back(gradient(p, a).frobenius_norm());
  double defect = is_in_group(a, 0.0).defect;
  if (!p.group_mode())
    defect = std::max(defect, is_in_cartan_model(*p.sigma, a, 0.0).defect);
  model_defects.push_back(defect);
}

namespace {

MatrixK ascent_rhs(const HeightProblem& p, const MatrixK& a) {
  return (p.yhat - a * p.yhat.conj_transpose() * a) * 0.25;
}

MatrixK polar_unitary_factor(const MatrixK& a);

MatrixK rk4_step(const HeightProblem& p, const MatrixK& a, double h) {
  const MatrixK k1 = ascent_rhs(p, a);
  const MatrixK k2 = ascent_rhs(p, a + k1 * (h / 2.0));
  const MatrixK k3 = ascent_rhs(p, a + k2 * (h / 2.0));
  const MatrixK k4 = ascent_rhs(p, a + k3 * h);
  return a + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

MatrixK integrate_to(const HeightProblem& p, MatrixK a, double from, double to,
                     double step) {
  const double span = to - from;
  if (span == 0.0) return a;
  const int nsub = std::max(1, static_cast<int>(std::ceil(std::abs(span) / step)));
  const double h = span / nsub;
  for (int s = 0; s < nsub; ++s) {
    a = rk4_step(p, a, h);
    const double defect = is_in_group(a, 0.0).defect;
    if (defect > 1e-3)
      throw StepRejected("pre-projection unitarity defect " +
                         std::to_string(defect) + " exceeds 1e-3");
    a = polar_unitary_factor(a);
  }
  return a;
}

}  // namespace

FlowTrace flow_numeric(const HeightProblem& p, const MatrixK& alpha0, double t0,
                       double t1, int samples, double step, const Tolerances& tol) {
  (void)tol;
  if (samples < 2) throw InvalidInput("flow_numeric needs at least two samples");
  FlowTrace trace;
  MatrixK a = integrate_to(p, alpha0, 0.0, t0, step);
  double t = t0;
  trace.push(t, a, p);
  const double dt = (t1 - t0) / (samples - 1);
  for (int s = 1; s < samples; ++s) {
    const double next = t0 + s * dt;
    a = integrate_to(p, a, t, next, step);
    t = next;
    trace.push(t, a, p);
  }
  return trace;
}

FlowTrace flow_closed_trace(const HeightProblem& p, const MatrixK& center,
                            const MatrixK& alpha0, double t0, double t1,
                            int samples, const Tolerances& tol) {
  if (samples < 2) throw InvalidInput("flow trace needs at least two samples");
  FlowTrace trace;
  for (int s = 0; s < samples; ++s) {
    const double t = t0 + (t1 - t0) * s / (samples - 1);
    trace.push(t, flow_closed_form(p, center, alpha0, t, tol), p);
  }
  return trace;
}

FlowTrace flow_transversality_demo(const Automorphism& sigma, const MatrixK& x,
                                   const MatrixK& alpha0, double t1, int samples,
                                   const Tolerances& tol) {
  (void)tol;
  // Integrate the group flow but measure the defect against the model.
  const HeightProblem group_problem = HeightProblem::group(x);
  if (samples < 2) throw InvalidInput("flow trace needs at least two samples");
  FlowTrace trace;
  MatrixK a = alpha0;
  double t = 0.0;
  auto push = [&](double tt, const MatrixK& pt) {
    trace.times.push_back(tt);
    trace.points.push_back(pt);
    trace.heights.push_back(height(x, pt));
    trace.grad_norms.push_back(gradient(group_problem, pt).frobenius_norm());
    trace.model_defects.push_back(is_in_cartan_model(sigma, pt, 0.0).defect);
  };
  push(t, a);
  for (int s = 1; s < samples; ++s) {
    const double next = t1 * s / (samples - 1);
    a = integrate_to(group_problem, a, t, next, 1e-3);
    t = next;
    push(t, a);
  }
  return trace;
}

ChartSpace chart_space(const HeightProblem& p, const MatrixK& a,
                       const Tolerances& tol) {
  const CriticalCheck c = is_critical(p, a, critical_tolerance(p, tol));
  if (!c.ok)
    throw NotCritical("chart_space needs a critical point; residual " +
                      std::to_string(c.residual));
  const MatrixK astar = a.conj_transpose();
  const MatrixK yhat = p.yhat;
  const double yscale = 1.0 / std::max(1.0, yhat.frobenius_norm());

  std::vector<std::function<MatrixK(const MatrixK&)>> constraints;
  // Tangency at A*.
  constraints.emplace_back([a, astar](const MatrixK& b) {
    return b * a + astar * b.conj_transpose();
  });
  // Model condition (absent in group mode).
  if (!p.group_mode()) {
    const Automorphism sigma = *p.sigma;
    constraints.emplace_back(
        [sigma](const MatrixK& b) { return sigma(b) - b.conj_transpose(); });
  }
  // Flow-generator annihilation; normalized so the null threshold is
  // insensitive to the size of yhat.
  constraints.emplace_back([astar, yhat, yscale](const MatrixK& b) {
    return (astar * yhat * b + b * yhat * astar) * yscale;
  });

  ChartSpace space;
  space.base = a;
  space.basis = real_null_space(a.field(), a.n(), constraints);
  return space;
}

MatrixK chart_to_critical(const HeightProblem& p, const MatrixK& a,
                          const MatrixK& beta0, const Tolerances& tol) {
  return cayley(a.conj_transpose(), beta0, tol);
}

namespace {

MatrixK polar_unitary_factor(const MatrixK& a) {
  // Nearest group element: U V* from any singular value decomposition.
  // Implemented directly per field to keep this file self-contained.
  switch (a.field()) {
    case Field::R: {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(
          to_real_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
      return from_real_eigen(svd.matrixU() * svd.matrixV().transpose());
    }
    case Field::C: {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
          to_complex_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
      return from_complex_eigen(svd.matrixU() * svd.matrixV().adjoint());
    }
    case Field::H: {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
          to_complex_eigen(complex_adjoint(a)),
          Eigen::ComputeFullU | Eigen::ComputeFullV);
      return quaternion_from_complex_adjoint(svd.matrixU() *
                                             svd.matrixV().adjoint());
    }
  }
  throw InvalidInput("polar_unitary_factor: unknown field");
}

}  // namespace

}  // namespace symflow
