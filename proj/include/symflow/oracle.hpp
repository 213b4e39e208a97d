#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symflow/catalog.hpp"
#include "symflow/decomposition.hpp"
#include "symflow/height.hpp"

namespace symflow {

enum class HeightMode { Group, Model };

struct OracleConfig {
  int restarts = 24;
  int max_iters = 400;
  double step = 0.5;            // initial curvilinear step
  double cluster_radius = 1e-4; // Frobenius merge radius
  std::uint64_t seed = 1;
  bool merge_families = true;   // merge clusters of the same positive-dimensional component
};

// Independent brute-force critical-set finder: multistart projected
// ascent, descent, and gradient-norm minimization (saddles are invisible
// to plain flow), Cayley retraction, Gauss-Newton refinement of converged
// starts, then geometric clustering. Clusters that carry a nontrivial
// Hessian kernel and matching (value, spectrum) signature are merged so a
// positive-dimensional critical component reports as one record with a
// non-shrinking cluster_size. Deterministic for a given seed; clusters are
// sorted by value, then coordinates. Restarts that fail to converge are
// skipped (reported via the optional counter), never fatal.
std::vector<CriticalPointRecord> oracle_critical_set(
    const SpaceSpec& space, const MatrixK& x, HeightMode mode,
    const OracleConfig& cfg = OracleConfig(),
    const Tolerances& tol = Tolerances::defaults(), int* failed_restarts = nullptr);

HeightProblem make_problem(const SpaceSpec& space, const MatrixK& x, HeightMode mode);

// Random start on the group (both components over R: the polar factor of
// a real matrix can land off the identity component) or on the model.
MatrixK random_start(const SpaceSpec& space, HeightMode mode, int restart_index,
                     Rng& rng);

// Max relative error between the analytic gradient and central differences
// of the height along Cayley-retracted tangent directions (step 1e-6).
double finite_difference_check(const SpaceSpec& space, const MatrixK& x,
                               HeightMode mode, int samples, std::uint64_t seed,
                               const Tolerances& tol = Tolerances::defaults());

// Same check against a deliberately wrong gradient; used as the negative
// control that the detector actually detects.
double finite_difference_check_corrupted(const SpaceSpec& space, const MatrixK& x,
                                         HeightMode mode, int samples,
                                         std::uint64_t seed,
                                         const Tolerances& tol = Tolerances::defaults());

// Morse decision: group mode from the singular-value structure alone,
// model mode empirically from the oracle's critical set.
MorseReport is_morse(const SpaceSpec& space, const MatrixK& x, HeightMode mode,
                     const OracleConfig& cfg = OracleConfig(),
                     const Tolerances& tol = Tolerances::defaults());

}  // namespace symflow
