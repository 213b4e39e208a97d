#pragma once

#include <string>
#include <vector>

#include "symflow/height.hpp"

namespace symflow {

// Singular value decomposition Y = U D V* with D real diagonal in
// canonical order: the zero block first, then strictly increasing values
// with their multiplicities. Quaternionic input is factored through the
// complex adjoint, whose doubled singular pairs fold back into
// quaternionic columns. Column phases are gauged so the first significant
// entry of each column of U is real positive, making the output
// deterministic despite gauge freedom.
struct CanonicalSVD {
  MatrixK u, v;
  std::vector<double> singular;    // raw values, ascending
  std::vector<int> block_sizes;    // n0 (zero block, possibly 0), n1..nk
  std::vector<double> values;      // cluster representatives t1 < ... < tk
  MatrixK d() const;               // diagonal matrix of `singular`
  int zero_dim() const { return block_sizes.empty() ? 0 : block_sizes.front(); }
};

CanonicalSVD svd_canonical(const MatrixK& y,
                           const Tolerances& tol = Tolerances::defaults());

enum class PolarSide { Left, Right };

// Left polar form Y = S Omega (S Hermitian positive semidefinite, Omega in
// the group) or right form Y = Omega S'. S is the H.p.-s. square root of
// YY* (left) or Y*Y (right); Omega is unique exactly when Y is invertible.
struct PolarForm {
  MatrixK s;
  MatrixK omega;
  PolarSide side = PolarSide::Left;
};

PolarForm polar(const MatrixK& y, PolarSide side = PolarSide::Left,
                const Tolerances& tol = Tolerances::defaults());

// Structure of an arbitrary Hermitian square root Sigma of YY*: a unitary
// W and real diagonal Delta with Sigma = W Delta W* and Delta^2 equal to
// the squared singular values of Y entrywise; Delta differs from D only by
// signs. Throws NotSquareRoot if Sigma^2 != YY* or the magnitudes do not
// match.
struct HermitianRootStructure {
  MatrixK w;
  std::vector<double> delta;  // ordered so |delta| matches canonical D
};

HermitianRootStructure hermitian_square_root_structure(
    const MatrixK& sigma_root, const MatrixK& y,
    const Tolerances& tol = Tolerances::defaults());

// A critical point A of the group height for Y is a global maximum exactly
// when Y A is positive semidefinite, i.e. when Y = (YA) A* is a true polar
// decomposition; the value is then the sum of all singular values. Throws
// NotCritical when A fails the critical equation.
bool global_max_polar_test(const MatrixK& y, const MatrixK& a,
                           const Tolerances& tol = Tolerances::defaults());

struct AdaptedResiduals {
  double reconstruction = 0.0;  // |Y - S Omega|
  double omega_sigma = 0.0;     // |sigma(Omega) - Omega*|
  double s_sigma = 0.0;         // |sigma(S) - Omega* S Omega|
  double theta_sigma = 0.0;     // |sigma(Theta) - Theta*|
  double min_spectrum = 0.0;    // smallest eigenvalue of the Hermitian YA
  // epsilon-regularization bookkeeping for singular inputs.
  std::vector<double> epsilons_used;
  std::vector<double> omega_diffs;
  bool stabilized = true;
};

// Polar decomposition adapted to sigma: Y = S Omega with
// sigma(Omega) = Omega* and sigma(S) = Omega* S Omega. Requires
// sigma(Y) = Y* and sigma(D) positive semidefinite. Invertible inputs have
// unique factors which are automatically adapted. Singular inputs go
// through the dense family Y + eps I (eps in {1e-4, 1e-6, 1e-8}, skipping
// eps that remain singular, stabilization when successive orthogonal parts
// differ below 1e-6 relative to |Omega|), then the limit candidate is
// refined to a certified global maximizer of Re Tr(Y .) on the model set.
// Throws HypothesisViolated on precondition failure and NonConvergence
// when the limit or the certificate fails.
struct AdaptedDecomposition {
  PolarForm form;          // left form: Y = S Omega
  MatrixK s_right;         // right Hermitian part S' = Omega* S Omega
  MatrixK theta;           // U* sigma(V) from the induced adapted SVD
  CanonicalSVD svd;        // Y = U D V* with V = Omega* U
  AdaptedResiduals residuals;
};

AdaptedDecomposition adapted_polar(const Automorphism& sigma, const MatrixK& y,
                                   const Tolerances& tol = Tolerances::defaults());

// Adapted SVD view of the same decomposition: Y = U D V* with
// Theta = U* sigma(V) satisfying sigma(Theta) = Theta*.
AdaptedDecomposition adapted_svd(const Automorphism& sigma, const MatrixK& y,
                                 const Tolerances& tol = Tolerances::defaults());

// Reduction of a model height problem to a real diagonal direction: with
// xhat = U D V* adapted, the twisted automorphism sigma' fixes D, the map
// A -> U* A V carries critical points of the X-problem on the sigma-model
// to critical points of the D-problem on the sigma'-model, and gradients
// correspond through W -> 2 U W V*. Requires the declared model = full
// sigma-set flag of the space.
struct DiagonalReduction {
  Automorphism sigma_prime;
  MatrixK u, v, theta;
  CanonicalSVD xhat_svd;
  MatrixK d;  // real diagonal direction of the reduced problem

  MatrixK map_point(const MatrixK& a) const;    // A -> U* A V
  MatrixK unmap_point(const MatrixK& b) const;  // B -> U B V*
};

DiagonalReduction reduce_to_diagonal(const SpaceSpec& space, const MatrixK& x,
                                     const Tolerances& tol = Tolerances::defaults());

// Block structure of a critical point of the group height for a canonical
// real diagonal D: A splits into diagonal boxes matching the multiplicity
// blocks, the zero box is only unitary, every other box is an Hermitian
// involution. Signatures give the critical value sum_i t_i (n_i^+ - n_i^-).
struct CriticalBlockStructure {
  std::vector<int> block_sizes;
  std::vector<MatrixK> blocks;
  std::vector<std::pair<int, int>> signatures;  // (#+1, #-1); zero box (0,0)
  double value = 0.0;            // from the signature arithmetic
  double off_diagonal_mass = 0.0;
};

CriticalBlockStructure critical_blocks_diagonal(
    const MatrixK& d, const MatrixK& a,
    const Tolerances& tol = Tolerances::defaults());

struct MorseReport {
  bool morse = false;
  std::string reason;
};

// Group-mode Morse test from the singular-value structure alone: Morse
// exactly when all singular values are positive and pairwise distinct.
MorseReport is_morse_group(const MatrixK& x,
                           const Tolerances& tol = Tolerances::defaults());

// Model-mode Morse test is empirical: every supplied critical point must
// have a trivial Hessian kernel.
MorseReport is_morse_model_from_records(const std::vector<CriticalPointRecord>& records);

}  // namespace symflow
