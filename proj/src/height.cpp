#include "symflow/height.hpp"

#include <algorithm>
#include <cmath>

#include "symflow/errors.hpp"
#include "symflow/linalg.hpp"

namespace symflow {

HeightProblem HeightProblem::group(MatrixK x) {
  if (x.frobenius_norm() == 0.0)
    throw InvalidInput("height direction X must be nonzero");
  HeightProblem p;
  p.yhat = x.conj_transpose() * 2.0;
  p.x = std::move(x);
  return p;
}

HeightProblem HeightProblem::model(Automorphism sigma, MatrixK x) {
  if (x.frobenius_norm() == 0.0)
    throw InvalidInput("height direction X must be nonzero");
  x.require_same_shape(sigma.conjugator(), "height problem");
  HeightProblem p;
  p.yhat = xhat(sigma, x);
  p.sigma = std::move(sigma);
  p.x = std::move(x);
  return p;
}

double height(const MatrixK& x, const MatrixK& a) {
  x.require_same_shape(a, "height");
  return (x * a).re_trace();
}

MatrixK xhat(const Automorphism& sigma, const MatrixK& x) {
  const MatrixK xh = x.conj_transpose() + sigma(x);
  const double defect = frobenius_distance(sigma(xh), xh.conj_transpose());
  if (defect > 1e-8 * std::max(1.0, xh.frobenius_norm()))
    throw ValidationFailure("sigma(xhat) = xhat* violated; the automorphism is inconsistent");
  return xh;
}

MatrixK gradient(const HeightProblem& p, const MatrixK& a) {
  return (p.yhat - a * p.yhat.conj_transpose() * a) * 0.25;
}

MatrixK grad_group(const MatrixK& x, const MatrixK& a) {
  return (x.conj_transpose() - a * x * a) * 0.5;
}

MatrixK grad_model(const Automorphism& sigma, const MatrixK& x, const MatrixK& a) {
  return gradient(HeightProblem::model(sigma, x), a);
}

MatrixK hessian_apply(const HeightProblem& p, const MatrixK& a, const MatrixK& w) {
  const MatrixK ys = p.yhat.conj_transpose();
  return (a * ys * w + w * ys * a) * -0.25;
}

MatrixK hessian_model(const Automorphism& sigma, const MatrixK& x,
                      const MatrixK& a, const MatrixK& w) {
  return hessian_apply(HeightProblem::model(sigma, x), a, w);
}

std::vector<MatrixK> tangent_basis(const HeightProblem& p, const MatrixK& a) {
  return p.group_mode() ? tangent_basis_group(a)
                        : tangent_basis_model(*p.sigma, a);
}

MatrixK tangent_project(const HeightProblem& p, const MatrixK& a, const MatrixK& z) {
  return p.group_mode() ? project_tangent_group(a, z)
                        : project_tangent_model(*p.sigma, a, z);
}

CriticalCheck is_critical_group(const MatrixK& x, const MatrixK& a, double tol) {
  const double r = (x.conj_transpose() - a * x * a).frobenius_norm();
  return {r <= tol, r};
}

CriticalCheck is_critical_model(const Automorphism& sigma, const MatrixK& x,
                                const MatrixK& a, double tol) {
  const MatrixK xh = xhat(sigma, x);
  const double r = (xh - a * sigma(xh) * a).frobenius_norm();
  return {r <= tol, r};
}

CriticalCheck is_critical(const HeightProblem& p, const MatrixK& a, double tol) {
  const double r = (p.yhat - a * p.yhat.conj_transpose() * a).frobenius_norm();
  return {r <= tol, r};
}

double critical_tolerance(const HeightProblem& p, const Tolerances& tol) {
  return tol.criticality * std::max(1.0, p.scale());
}

CriticalPointRecord hessian_spectrum(const HeightProblem& p, const MatrixK& a,
                                     const Tolerances& tol) {
  CriticalPointRecord rec;
  rec.point = a;
  rec.value = height(p.x, a);
  rec.residual = gradient(p, a).frobenius_norm();

  const std::vector<MatrixK> basis = tangent_basis(p, a);
  const int d = static_cast<int>(basis.size());
  Eigen::MatrixXd h(d, d);
  for (int j = 0; j < d; ++j) {
    const MatrixK hj = hessian_apply(p, a, basis[static_cast<std::size_t>(j)]);
    for (int i = 0; i < d; ++i)
      h(i, j) = re_trace_inner(basis[static_cast<std::size_t>(i)], hj);
  }
  // The operator is self-adjoint; symmetrize away roundoff before solving.
  const Eigen::MatrixXd hs = 0.5 * (h + h.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hs);
  rec.hessian_eigenvalues.assign(es.eigenvalues().data(),
                                 es.eigenvalues().data() + d);

  double max_abs = 0.0;
  for (double lam : rec.hessian_eigenvalues) max_abs = std::max(max_abs, std::abs(lam));
  const double gap = tol.kernel_gap * std::max(max_abs, 1e-12);
  rec.kernel_dim = static_cast<int>(
      std::count_if(rec.hessian_eigenvalues.begin(), rec.hessian_eigenvalues.end(),
                    [gap](double lam) { return std::abs(lam) < gap; }));
  rec.morse = rec.kernel_dim == 0;
  return rec;
}

InclusionReport critical_inclusion_check(const Automorphism& sigma, const MatrixK& x,
                                         const std::vector<MatrixK>& group_points,
                                         const std::vector<MatrixK>& model_points,
                                         double tol) {
  InclusionReport rep;
  const MatrixK xh = xhat(sigma, x);
  const MatrixK sig_xh = sigma(xh);
  rep.star_compatible =
      frobenius_distance(sigma(x), x.conj_transpose()) <= tol;

  // Model-critical points solve the group equation for sigma(xhat).
  for (std::size_t t = 0; t < model_points.size(); ++t) {
    const CriticalCheck c = is_critical_group(sig_xh, model_points[t], tol);
    rep.worst_residual = std::max(rep.worst_residual, c.residual);
    if (!c.ok) {
      rep.cor_model_via_sigma = false;
      throw RelationViolated(
          "model critical point #" + std::to_string(t) +
          " fails the sigma(xhat) group criticality equation (residual " +
          std::to_string(c.residual) + ")");
    }
  }
  // Group-critical points lying in the model are model-critical.
  for (std::size_t t = 0; t < group_points.size(); ++t) {
    if (!is_in_cartan_model(sigma, group_points[t], tol).ok) continue;
    const CriticalCheck c = is_critical_model(sigma, x, group_points[t], tol * 4.0);
    rep.worst_residual = std::max(rep.worst_residual, c.residual);
    if (!c.ok) {
      rep.cor_group_in_model = false;
      throw RelationViolated("group critical point #" + std::to_string(t) +
                             " lies in the model but fails model criticality");
    }
  }
  // Under sigma(X) = X* the two critical sets agree on the model.
  if (rep.star_compatible) {
    for (std::size_t t = 0; t < model_points.size(); ++t) {
      const CriticalCheck c = is_critical_group(x, model_points[t], tol);
      rep.worst_residual = std::max(rep.worst_residual, c.residual);
      if (!c.ok) {
        rep.cor_equality = false;
        throw RelationViolated(
            "sigma(X) = X* but model critical point #" + std::to_string(t) +
            " is not group-critical");
      }
    }
    rep.detail = "sigma(X) = X*: verified equality of the two critical sets";
  } else {
    rep.detail = "sigma(X) != X*: equality clause not applicable";
  }
  return rep;
}

namespace {

Eigen::VectorXd polish_residual(const HeightProblem& p, const MatrixK& a,
                                double weight) {
  const int m = real_dim(a.field(), a.n());
  const bool model = !p.group_mode();
  Eigen::VectorXd r(model ? 3 * m : 2 * m);
  r.segment(0, m) = to_coords(gradient(p, a));
  const MatrixK eye = MatrixK::identity(a.field(), a.n());
  r.segment(m, m) = to_coords((a * a.conj_transpose() - eye) * weight);
  if (model)
    r.segment(2 * m, m) =
        to_coords(((*p.sigma)(a) - a.conj_transpose()) * weight);
  return r;
}

}  // namespace

MatrixK polish_critical(const HeightProblem& p, MatrixK a, double target_residual,
                        int max_iters, const Tolerances& tol) {
  const Field f = a.field();
  const int n = a.n();
  const int m = real_dim(f, n);
  const bool model = !p.group_mode();
  const double weight = std::max(1.0, p.scale() / 4.0);
  if (target_residual < 0.0)
    target_residual = 1e-12 * std::max(1.0, p.scale());
  (void)tol;

  const MatrixK ystar = p.yhat.conj_transpose();
  Eigen::VectorXd r = polish_residual(p, a, weight);
  for (int iter = 0; iter < max_iters; ++iter) {
    if (r.norm() <= target_residual) return a;
    // All three residual pieces are linear in the perturbation, so the
    // Jacobian assembles exactly, column per ambient coordinate.
    Eigen::MatrixXd jac(r.size(), m);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
    for (int c = 0; c < m; ++c) {
      e(c) = 1.0;
      const MatrixK w = from_coords(f, n, e);
      jac.block(0, c, m, 1) =
          to_coords((w * ystar * a + a * ystar * w) * -0.25);
      jac.block(m, c, m, 1) =
          to_coords((w * a.conj_transpose() + a * w.conj_transpose()) * weight);
      if (model)
        jac.block(2 * m, c, m, 1) =
            to_coords(((*p.sigma)(w) - w.conj_transpose()) * weight);
      e(c) = 0.0;
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jac);
    cod.setThreshold(1e-7);
    Eigen::VectorXd delta = cod.solve(-r);
    // Backtrack if the full step overshoots.
    MatrixK next = a;
    Eigen::VectorXd rn = r;
    for (int half = 0; half < 6; ++half) {
      next = from_coords(f, n, to_coords(a) + delta);
      rn = polish_residual(p, next, weight);
      if (rn.norm() < r.norm()) break;
      delta *= 0.5;
    }
    if (rn.norm() >= r.norm()) break;  // stagnated
    a = next;
    r = rn;
  }
  if (r.norm() > target_residual)
    throw NonConvergence("critical-point refinement stalled at residual " +
                         std::to_string(r.norm()));
  return a;
}

double critical_value_from_signs(const std::vector<double>& values,
                                 const std::vector<std::vector<int>>& signs) {
  if (values.size() != signs.size())
    throw DimensionMismatch("one sign pattern per repeated-value block expected");
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    int tr = 0;
    for (int eps : signs[i]) {
      if (eps != 1 && eps != -1)
        throw InvalidInput("sign patterns must consist of +1 and -1");
      tr += eps;
    }
    total += values[i] * tr;
  }
  return total;
}

}  // namespace symflow
