#include "symflow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "symflow/cayley.hpp"
#include "symflow/errors.hpp"
#include "symflow/linalg.hpp"

namespace symflow {

HeightProblem make_problem(const SpaceSpec& space, const MatrixK& x,
                           HeightMode mode) {
  if (mode == HeightMode::Group) return HeightProblem::group(x);
  if (space.group_mode())
    throw InvalidInput("space '" + space.name + "' has no automorphism; model mode unavailable");
  return HeightProblem::model(*space.sigma, x);
}

MatrixK random_start(const SpaceSpec& space, HeightMode mode, int restart_index,
                     Rng& rng) {
  if (mode == HeightMode::Model) return random_cartan_point(*space.sigma, rng);
  MatrixK a = random_group_element(space.field, space.n, rng);
  if (space.field == Field::R && restart_index % 2 == 1) {
    // Cover the determinant -1 component as well.
    MatrixK flip = MatrixK::identity(Field::R, space.n);
    flip.at(0, 0) = Quat(-1.0);
    a = flip * a;
  }
  return a;
}

namespace {

// Curvilinear backtracking step for an objective along the retraction.
// Returns false when no step improves the objective.
template <typename Objective>
bool line_search_step(MatrixK& a, const MatrixK& direction,
                      const Objective& objective, double& step) {
  const double f0 = objective(a);
  double s = step;
  for (int half = 0; half < 40; ++half) {
    MatrixK trial;
    try {
      trial = cayley_retract(a, direction * s);
    } catch (const OutsideDomain&) {
      s *= 0.5;
      continue;
    }
    if (objective(trial) < f0 - 1e-14) {
      a = trial;
      step = std::min(s * 2.0, 4.0);
      return true;
    }
    s *= 0.5;
  }
  return false;
}

enum class Phase { Ascent, Descent, Saddle };

// Riemannian gradient of g = |grad h|^2, used to reach saddles.
MatrixK grad_norm2_gradient(const HeightProblem& p, const MatrixK& a) {
  const MatrixK g = gradient(p, a);
  const MatrixK ystar = p.yhat.conj_transpose();
  const MatrixK ambient = (g * a.conj_transpose() * p.yhat +
                           p.yhat * a.conj_transpose() * g) * -0.5;
  return tangent_project(p, a, ambient);
}

bool run_restart(const HeightProblem& p, MatrixK& a, Phase phase, int max_iters,
                 double step0, double coarse_tol) {
  double step = step0;
  for (int it = 0; it < max_iters; ++it) {
    const MatrixK g = gradient(p, a);
    if (g.frobenius_norm() <= coarse_tol) return true;
    MatrixK direction;
    std::function<double(const MatrixK&)> objective;
    switch (phase) {
      case Phase::Ascent:
        direction = g;
        objective = [&p](const MatrixK& m) { return -height(p.x, m); };
        break;
      case Phase::Descent:
        direction = -g;
        objective = [&p](const MatrixK& m) { return height(p.x, m); };
        break;
      case Phase::Saddle:
        direction = -grad_norm2_gradient(p, a);
        objective = [&p](const MatrixK& m) {
          const MatrixK gm = gradient(p, m);
          return re_trace_inner(gm, gm);
        };
        break;
    }
    const double dn = direction.frobenius_norm();
    if (dn > 0.0) direction = direction * (1.0 / dn);
    if (!line_search_step(a, direction, objective, step)) break;
  }
  return gradient(p, a).frobenius_norm() <= coarse_tol * 10.0;
}

struct Cluster {
  CriticalPointRecord rec;
};

bool same_family(const CriticalPointRecord& a, const CriticalPointRecord& b,
                 double value_tol, double spec_tol) {
  if (a.kernel_dim == 0 || b.kernel_dim == 0) return false;
  if (a.kernel_dim != b.kernel_dim) return false;
  if (std::abs(a.value - b.value) > value_tol) return false;
  if (a.hessian_eigenvalues.size() != b.hessian_eigenvalues.size()) return false;
  for (std::size_t i = 0; i < a.hessian_eigenvalues.size(); ++i)
    if (std::abs(a.hessian_eigenvalues[i] - b.hessian_eigenvalues[i]) > spec_tol)
      return false;
  return true;
}

bool coords_less(const MatrixK& a, const MatrixK& b) {
  const Eigen::VectorXd ca = to_coords(a), cb = to_coords(b);
  for (int i = 0; i < ca.size(); ++i) {
    if (ca(i) < cb(i) - 1e-12) return true;
    if (ca(i) > cb(i) + 1e-12) return false;
  }
  return false;
}

}  // namespace

std::vector<CriticalPointRecord> oracle_critical_set(
    const SpaceSpec& space, const MatrixK& x, HeightMode mode,
    const OracleConfig& cfg, const Tolerances& tol, int* failed_restarts) {
  const SpaceSpec resolved = resolve_space(space, x.field(), x.n());
  const HeightProblem p = make_problem(resolved, x, mode);
  const double scale = std::max(1.0, p.scale());
  const double coarse_tol = 1e-6 * scale;
  Rng rng(cfg.seed);
  int failures = 0;

  std::vector<Cluster> clusters;
  for (int r = 0; r < cfg.restarts; ++r) {
    MatrixK a = random_start(resolved, mode, r, rng);
    const Phase phase = static_cast<Phase>(r % 3);
    if (!run_restart(p, a, phase, cfg.max_iters, cfg.step, coarse_tol)) {
      ++failures;  // this restart did not converge; log and move on
      continue;
    }
    try {
      a = polish_critical(p, a, 1e-11 * scale);
    } catch (const NonConvergence&) {
      ++failures;
      continue;
    }
    // Geometric merge.
    bool merged = false;
    for (Cluster& c : clusters) {
      if (frobenius_distance(c.rec.point, a) <= cfg.cluster_radius) {
        ++c.rec.cluster_size;
        merged = true;
        break;
      }
    }
    if (merged) continue;
    Cluster c;
    c.rec = hessian_spectrum(p, a, tol);
    clusters.push_back(std::move(c));
  }

  // Merge clusters that sample the same positive-dimensional component:
  // they share the value, the spectrum and a nontrivial kernel.
  if (cfg.merge_families) {
    const double value_tol = 1e-6 * scale * std::max(1, x.n());
    const double spec_tol = 1e-4 * scale;
    std::vector<Cluster> out;
    for (Cluster& c : clusters) {
      bool merged = false;
      for (Cluster& o : out) {
        if (same_family(o.rec, c.rec, value_tol, spec_tol)) {
          o.rec.cluster_size += c.rec.cluster_size;
          merged = true;
          break;
        }
      }
      if (!merged) out.push_back(std::move(c));
    }
    clusters = std::move(out);
  }

  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.rec.value != b.rec.value) return a.rec.value < b.rec.value;
    return coords_less(a.rec.point, b.rec.point);
  });

  if (failed_restarts != nullptr) *failed_restarts = failures;
  std::vector<CriticalPointRecord> records;
  records.reserve(clusters.size());
  for (Cluster& c : clusters) records.push_back(std::move(c.rec));
  return records;
}

namespace {

double fd_check_impl(const SpaceSpec& space, const MatrixK& x, HeightMode mode,
                     int samples, std::uint64_t seed, double corruption,
                     const Tolerances& tol) {
  const SpaceSpec resolved = resolve_space(space, x.field(), x.n());
  const HeightProblem p = make_problem(resolved, x, mode);
  Rng rng(seed);
  const double eps = 1e-6;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const MatrixK a = random_start(resolved, mode, s, rng);
    const MatrixK t = mode == HeightMode::Model
                          ? random_tangent_model(*resolved.sigma, a, rng)
                          : random_tangent_group(a, rng);
    const double analytic =
        re_trace_inner(gradient(p, a) * (1.0 + corruption), t);
    const double plus = height(p.x, cayley_retract(a, t * eps, tol));
    const double minus = height(p.x, cayley_retract(a, t * -eps, tol));
    const double numeric = (plus - minus) / (2.0 * eps);
    const double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-6});
    worst = std::max(worst, std::abs(analytic - numeric) / denom);
  }
  return worst;
}

}  // namespace

double finite_difference_check(const SpaceSpec& space, const MatrixK& x,
                               HeightMode mode, int samples, std::uint64_t seed,
                               const Tolerances& tol) {
  return fd_check_impl(space, x, mode, samples, seed, 0.0, tol);
}

double finite_difference_check_corrupted(const SpaceSpec& space, const MatrixK& x,
                                         HeightMode mode, int samples,
                                         std::uint64_t seed, const Tolerances& tol) {
  return fd_check_impl(space, x, mode, samples, seed, 1.0, tol);
}

MorseReport is_morse(const SpaceSpec& space, const MatrixK& x, HeightMode mode,
                     const OracleConfig& cfg, const Tolerances& tol) {
  if (mode == HeightMode::Group) return is_morse_group(x, tol);
  return is_morse_model_from_records(
      oracle_critical_set(space, x, mode, cfg, tol));
}

}  // namespace symflow
