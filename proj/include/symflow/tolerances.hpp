#pragma once

namespace symflow {

// Numerical policy. The identities computed by this library are exact in
// exact arithmetic, so every threshold below is implementation policy, not
// mathematics. The CLI echoes the active ledger in its output so results
// can be re-thresholded downstream.
struct Tolerances {
  // Frobenius tolerance for membership and equality tests.
  double equality = 1e-9;
  // Relative singularity threshold: a matrix counts as singular when its
  // smallest singular value is below singularity * max(1, frobenius norm).
  double singularity = 1e-12;
  // Relative term-size cutoff for matrix power series.
  double series = 1e-16;
  // Relative criticality threshold: a point counts as critical when the
  // critical-equation residual is below criticality * norm of the
  // effective direction matrix.
  double criticality = 1e-8;
  // Hessian kernel gap: eigenvalues of magnitude below
  // kernel_gap * max(|eigenvalue|, 1e-12) count as kernel.
  double kernel_gap = 1e-6;
  // Relative gap that separates singular-value clusters. Morse
  // classification is discontinuous in this knob, hence CLI-exposed.
  double svd_gap = 1e-8;
  // Frobenius radius used to merge converged oracle points.
  double cluster_radius = 1e-4;

  // Default ledger; SYMFLOW_TOL (a double) overrides `equality`.
  static Tolerances defaults();
};

}  // namespace symflow
