#include "symflow/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symflow/errors.hpp"
#include "symflow/linalg.hpp"

namespace symflow {

namespace {

using Cplx = std::complex<double>;

std::vector<Quat> column(const MatrixK& m, int c) {
  std::vector<Quat> v(static_cast<std::size_t>(m.n()));
  for (int r = 0; r < m.n(); ++r) v[static_cast<std::size_t>(r)] = m.at(r, c);
  return v;
}

void set_column(MatrixK& m, int c, const std::vector<Quat>& v) {
  for (int r = 0; r < m.n(); ++r) m.at(r, c) = v[static_cast<std::size_t>(r)];
}

std::vector<Quat> matvec(const MatrixK& m, const std::vector<Quat>& v) {
  std::vector<Quat> out(static_cast<std::size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) {
    Quat s;
    for (int j = 0; j < m.n(); ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

// Gauge: right-multiply each column of U (and the matching column of V) by
// the conjugate phase of U's first significant entry. Real diagonal D
// commutes with unit phases, so the product U D V* is unchanged.
void gauge_fix_columns(MatrixK& u, MatrixK* v) {
  for (int c = 0; c < u.n(); ++c) {
    Quat pivot;
    for (int r = 0; r < u.n(); ++r) {
      if (u.at(r, c).norm() > 1e-8) {
        pivot = u.at(r, c);
        break;
      }
    }
    const Quat phase = unit_phase(pivot).conj();
    for (int r = 0; r < u.n(); ++r) u.at(r, c) = u.at(r, c) * phase;
    if (v != nullptr)
      for (int r = 0; r < u.n(); ++r) v->at(r, c) = v->at(r, c) * phase;
  }
}

void cluster_values(const std::vector<double>& sv, double rel_gap,
                    std::vector<int>* block_sizes, std::vector<double>* values) {
  block_sizes->clear();
  values->clear();
  const int n = static_cast<int>(sv.size());
  const double top = n > 0 ? sv.back() : 0.0;
  const double zero_cut = rel_gap * top;
  int zero_count = 0;
  while (zero_count < n && sv[static_cast<std::size_t>(zero_count)] <= zero_cut)
    ++zero_count;
  block_sizes->push_back(zero_count);
  int start = zero_count;
  for (int i = zero_count; i < n; ++i) {
    const bool last = i == n - 1;
    const bool gap = !last && (sv[static_cast<std::size_t>(i + 1)] -
                               sv[static_cast<std::size_t>(i)]) > rel_gap * top;
    if (last || gap) {
      const int count = i - start + 1;
      double mean = 0.0;
      for (int t = start; t <= i; ++t) mean += sv[static_cast<std::size_t>(t)];
      block_sizes->push_back(count);
      values->push_back(mean / count);
      start = i + 1;
    }
  }
}

// Quaternionic singular triples from the complex adjoint: right singular
// subspaces of chi(Y) are invariant under the j-partner map, so each
// doubled singular value contributes one quaternionic column.
void svd_quaternion(const MatrixK& y, MatrixK* u, MatrixK* v,
                    std::vector<double>* sv, double rel_gap) {
  const int n = y.n();
  const Eigen::MatrixXcd z = to_complex_eigen(complex_adjoint(y));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);

  auto j_partner = [n](const Eigen::VectorXcd& x) {
    Eigen::VectorXcd w(2 * n);
    w.head(n) = x.tail(n).conjugate();
    w.tail(n) = -x.head(n).conjugate();
    return w;
  };
  auto to_quat_column = [n](const Eigen::VectorXcd& x) {
    std::vector<Quat> col(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
      col[static_cast<std::size_t>(r)] =
          Quat(x(r).real(), x(r).imag(), -x(n + r).real(), x(n + r).imag());
    return col;
  };

  // Ascending order of the doubled values.
  std::vector<int> order(static_cast<std::size_t>(2 * n));
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());  // Jacobi returns descending

  *u = MatrixK(Field::H, n);
  *v = MatrixK(Field::H, n);
  sv->clear();

  const double top = svd.singularValues()(0);
  const double zero_cut = std::max(rel_gap * top, 0.0);

  std::vector<Eigen::VectorXcd> accepted_right;
  std::vector<Eigen::VectorXcd> accepted_left;  // only for the kernel block
  int next = 0;
  for (int idx : order) {
    if (next >= n) break;
    Eigen::VectorXcd r = svd.matrixV().col(idx);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : accepted_right) r -= q.dot(r) * q;
    const double nr = r.norm();
    if (nr < 0.5) continue;
    r /= nr;
    Eigen::VectorXcd rp = j_partner(r);
    for (const auto& q : accepted_right) rp -= q.dot(rp) * q;
    rp.normalize();

    const double t = svd.singularValues()(idx);
    set_column(*v, next, to_quat_column(r));
    if (t > zero_cut) {
      // Left vector coupled through Y itself keeps U D V* = Y exact.
      const std::vector<Quat> lv = matvec(y, column(*v, next));
      std::vector<Quat> lcol(lv);
      double norm2 = 0.0;
      for (const Quat& q : lcol) norm2 += q.norm2();
      const double scale = 1.0 / std::sqrt(norm2);
      for (Quat& q : lcol) q = q * scale;
      set_column(*u, next, lcol);
      sv->push_back(std::sqrt(norm2));
    } else {
      sv->push_back(t);
    }
    accepted_right.push_back(r);
    accepted_right.push_back(rp);
    ++next;
  }
  if (next != n)
    throw NonConvergence("quaternionic singular pairing failed");

  // Kernel block of U: left singular vectors of the zero values, paired
  // the same way and orthogonal to the range columns.
  int kernel = 0;
  while (kernel < n && (*sv)[static_cast<std::size_t>(kernel)] <= zero_cut) ++kernel;
  if (kernel > 0) {
    for (int c = kernel; c < n; ++c) {
      Eigen::VectorXcd lc(2 * n);
      const std::vector<Quat> col = column(*u, c);
      for (int r = 0; r < n; ++r) {
        lc(r) = Cplx(col[static_cast<std::size_t>(r)].w,
                     col[static_cast<std::size_t>(r)].x);
        lc(n + r) = Cplx(-col[static_cast<std::size_t>(r)].y,
                         col[static_cast<std::size_t>(r)].z);
      }
      accepted_left.push_back(lc);
      accepted_left.push_back(j_partner(lc));
    }
    int placed = 0;
    for (int idx : order) {
      if (placed >= kernel) break;
      Eigen::VectorXcd l = svd.matrixU().col(idx);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : accepted_left) l -= q.dot(l) * q;
      const double nl = l.norm();
      if (nl < 0.5) continue;
      l /= nl;
      Eigen::VectorXcd lp = j_partner(l);
      for (const auto& q : accepted_left) lp -= q.dot(lp) * q;
      lp.normalize();
      set_column(*u, placed, to_quat_column(l));
      accepted_left.push_back(l);
      accepted_left.push_back(lp);
      ++placed;
    }
    if (placed != kernel)
      throw NonConvergence("quaternionic kernel pairing failed");
  }
}

}  // namespace

MatrixK CanonicalSVD::d() const {
  return MatrixK::diagonal(u.field(), singular);
}

CanonicalSVD svd_canonical(const MatrixK& y, const Tolerances& tol) {
  CanonicalSVD out;
  const int n = y.n();
  switch (y.field()) {
    case Field::R: {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(
          to_real_eigen(y), Eigen::ComputeFullU | Eigen::ComputeFullV);
      Eigen::MatrixXd ue(n, n), ve(n, n);
      out.singular.resize(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) {
        ue.col(c) = svd.matrixU().col(n - 1 - c);
        ve.col(c) = svd.matrixV().col(n - 1 - c);
        out.singular[static_cast<std::size_t>(c)] = svd.singularValues()(n - 1 - c);
      }
      out.u = from_real_eigen(ue);
      out.v = from_real_eigen(ve);
      break;
    }
    case Field::C: {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
          to_complex_eigen(y), Eigen::ComputeFullU | Eigen::ComputeFullV);
      Eigen::MatrixXcd ue(n, n), ve(n, n);
      out.singular.resize(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) {
        ue.col(c) = svd.matrixU().col(n - 1 - c);
        ve.col(c) = svd.matrixV().col(n - 1 - c);
        out.singular[static_cast<std::size_t>(c)] = svd.singularValues()(n - 1 - c);
      }
      out.u = from_complex_eigen(ue);
      out.v = from_complex_eigen(ve);
      break;
    }
    case Field::H:
      svd_quaternion(y, &out.u, &out.v, &out.singular, tol.svd_gap);
      break;
  }
  gauge_fix_columns(out.u, &out.v);
  cluster_values(out.singular, tol.svd_gap, &out.block_sizes, &out.values);

  const double recon =
      frobenius_distance(out.u * out.d() * out.v.conj_transpose(), y);
  if (recon > 1e-10 * std::max(1.0, y.frobenius_norm()))
    throw NonConvergence("singular value decomposition residual " +
                         std::to_string(recon));
  return out;
}

PolarForm polar(const MatrixK& y, PolarSide side, const Tolerances& tol) {
  const CanonicalSVD svd = svd_canonical(y, tol);
  PolarForm form;
  form.side = side;
  form.omega = svd.u * svd.v.conj_transpose();
  const MatrixK d = svd.d();
  form.s = side == PolarSide::Left
               ? svd.u * d * svd.u.conj_transpose()
               : svd.v * d * svd.v.conj_transpose();
  return form;
}

HermitianRootStructure hermitian_square_root_structure(const MatrixK& sigma_root,
                                                       const MatrixK& y,
                                                       const Tolerances& tol) {
  sigma_root.require_same_shape(y, "hermitian_square_root_structure");
  const MatrixK gram = y * y.conj_transpose();
  const double scale = std::max(1.0, gram.frobenius_norm());
  if (frobenius_distance(sigma_root * sigma_root, gram) > 1e-8 * scale)
    throw NotSquareRoot("Sigma^2 differs from Y Y*");
  if (frobenius_distance(sigma_root, sigma_root.conj_transpose()) > 1e-8 * scale)
    throw NotSquareRoot("Sigma is not Hermitian");

  const HermitianEigen eig = hermitian_eigen(sigma_root, tol);
  const CanonicalSVD svd = svd_canonical(y, tol);
  const int n = y.n();

  // Reorder eigenpairs so |Delta| matches the canonical D (zeros first,
  // magnitudes ascending); within equal magnitude the negative sign leads.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double va = eig.eigenvalues[static_cast<std::size_t>(a)];
    const double vb = eig.eigenvalues[static_cast<std::size_t>(b)];
    if (std::abs(va) != std::abs(vb)) return std::abs(va) < std::abs(vb);
    return va < vb;
  });

  HermitianRootStructure out;
  out.w = MatrixK(y.field(), n);
  out.delta.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    const int src = order[static_cast<std::size_t>(c)];
    for (int r = 0; r < n; ++r) out.w.at(r, c) = eig.vectors.at(r, src);
    out.delta[static_cast<std::size_t>(c)] =
        eig.eigenvalues[static_cast<std::size_t>(src)];
  }
  gauge_fix_columns(out.w, nullptr);
  for (int c = 0; c < n; ++c) {
    const double diff = std::abs(std::abs(out.delta[static_cast<std::size_t>(c)]) -
                                 svd.singular[static_cast<std::size_t>(c)]);
    if (diff > 1e-7 * std::max(1.0, y.frobenius_norm()))
      throw NotSquareRoot("|Delta| does not match the singular values of Y");
  }
  return out;
}

bool global_max_polar_test(const MatrixK& y, const MatrixK& a,
                           const Tolerances& tol) {
  const double scale = std::max(1.0, y.frobenius_norm());
  const CriticalCheck crit = is_critical_group(y, a, tol.criticality * scale);
  if (!crit.ok)
    throw NotCritical("global_max_polar_test needs a critical point; residual " +
                      std::to_string(crit.residual));
  const MatrixK prod = y * a;
  const MatrixK herm = (prod + prod.conj_transpose()) * 0.5;
  return min_eigenvalue_hermitian(herm, tol) >= -1e-10 * scale;
}

namespace {

AdaptedResiduals verify_adapted(const Automorphism& sigma, const MatrixK& y,
                                const MatrixK& s, const MatrixK& omega,
                                const Tolerances& tol) {
  AdaptedResiduals res;
  res.reconstruction = frobenius_distance(s * omega, y);
  res.omega_sigma = frobenius_distance(sigma(omega), omega.conj_transpose());
  res.s_sigma = frobenius_distance(sigma(s),
                                   omega.conj_transpose() * s * omega);
  const MatrixK prod = y * omega.conj_transpose();
  const MatrixK herm = (prod + prod.conj_transpose()) * 0.5;
  res.min_spectrum = min_eigenvalue_hermitian(herm, tol);
  return res;
}

bool residuals_pass(const AdaptedResiduals& r, double bar, double scale) {
  return r.reconstruction <= bar && r.omega_sigma <= bar && r.s_sigma <= bar &&
         r.min_spectrum >= -1e-10 * scale;
}

}  // namespace

AdaptedDecomposition adapted_polar(const Automorphism& sigma, const MatrixK& y,
                                   const Tolerances& tol) {
  y.require_same_shape(sigma.conjugator(), "adapted_polar");
  const double scale = std::max(1.0, y.frobenius_norm());
  if (frobenius_distance(sigma(y), y.conj_transpose()) > 1e-8 * scale)
    throw HypothesisViolated("adapted_polar requires sigma(Y) = Y*");

  CanonicalSVD svd = svd_canonical(y, tol);
  const MatrixK d = svd.d();
  if (min_eigenvalue_hermitian((sigma(d) + sigma(d).conj_transpose()) * 0.5, tol) <
      -1e-10 * scale)
    throw HypothesisViolated("adapted_polar requires sigma(D) positive semidefinite");

  const MatrixK s = svd.u * d * svd.u.conj_transpose();
  const bool invertible =
      smallest_singular_value(y) > tol.singularity * scale;

  AdaptedDecomposition out;
  MatrixK omega;
  AdaptedResiduals bookkeeping;
  if (invertible) {
    // Unique polar factors of an invertible sigma-compatible matrix are
    // already adapted.
    omega = svd.u * svd.v.conj_transpose();
  } else {
    // Dense-family limit: the polar factor of Y + eps I, eps shrinking.
    MatrixK prev;
    bool have_prev = false;
    const MatrixK eye = MatrixK::identity(y.field(), y.n());
    for (double eps : {1e-4, 1e-6, 1e-8}) {
      const MatrixK yeps = y + eye * eps;
      if (smallest_singular_value(yeps) <=
          tol.singularity * std::max(1.0, yeps.frobenius_norm()))
        continue;  // this eps keeps the matrix singular; skip it
      const CanonicalSVD se = svd_canonical(yeps, tol);
      const MatrixK oe = se.u * se.v.conj_transpose();
      bookkeeping.epsilons_used.push_back(eps);
      if (have_prev)
        bookkeeping.omega_diffs.push_back(frobenius_distance(oe, prev));
      prev = oe;
      have_prev = true;
    }
    if (!have_prev)
      throw NonConvergence("all regularizations of the singular input stayed singular");
    const double stab_bar = 1e-6 * std::max(1.0, std::sqrt(double(y.n())));
    if (!bookkeeping.omega_diffs.empty() &&
        bookkeeping.omega_diffs.back() > stab_bar) {
      bookkeeping.stabilized = false;
      throw NonConvergence("singular-case limit did not stabilize (last diff " +
                           std::to_string(bookkeeping.omega_diffs.back()) + ")");
    }
    // Refine the limit candidate to a certified maximizer of Re Tr(Y .)
    // on the model set; its conjugate transpose is the adapted factor.
    const HeightProblem problem = HeightProblem::model(sigma, y);
    const MatrixK a = polish_critical(problem, prev.conj_transpose());
    omega = a.conj_transpose();
  }

  AdaptedResiduals res = verify_adapted(sigma, y, s, omega, tol);
  const double bar = 1e-8 * scale;
  if (!residuals_pass(res, bar, scale) && invertible) {
    // Unexpected for invertible input; refine once before giving up.
    const HeightProblem problem = HeightProblem::model(sigma, y);
    const MatrixK a = polish_critical(problem, omega.conj_transpose());
    omega = a.conj_transpose();
    res = verify_adapted(sigma, y, s, omega, tol);
  }
  if (!residuals_pass(res, bar, scale))
    throw NonConvergence("adapted polar certificate failed (reconstruction " +
                         std::to_string(res.reconstruction) + ", sigma(Omega) " +
                         std::to_string(res.omega_sigma) + ", sigma(S) " +
                         std::to_string(res.s_sigma) + ")");
  res.epsilons_used = bookkeeping.epsilons_used;
  res.omega_diffs = bookkeeping.omega_diffs;
  res.stabilized = bookkeeping.stabilized;

  out.form.side = PolarSide::Left;
  out.form.s = s;
  out.form.omega = omega;
  out.s_right = omega.conj_transpose() * s * omega;
  // Adapted SVD induced by the adapted polar form: V = Omega* U.
  out.svd = svd;
  out.svd.v = omega.conj_transpose() * svd.u;
  out.theta = svd.u.conj_transpose() * sigma(out.svd.v);
  res.theta_sigma =
      frobenius_distance(sigma(out.theta), out.theta.conj_transpose());
  if (res.theta_sigma > bar)
    throw NonConvergence("adapted SVD gauge failed: sigma(Theta) != Theta*");
  out.residuals = res;
  return out;
}

AdaptedDecomposition adapted_svd(const Automorphism& sigma, const MatrixK& y,
                                 const Tolerances& tol) {
  return adapted_polar(sigma, y, tol);
}

MatrixK DiagonalReduction::map_point(const MatrixK& a) const {
  return u.conj_transpose() * a * v;
}

MatrixK DiagonalReduction::unmap_point(const MatrixK& b) const {
  return u * b * v.conj_transpose();
}

DiagonalReduction reduce_to_diagonal(const SpaceSpec& space, const MatrixK& x,
                                     const Tolerances& tol) {
  if (space.group_mode())
    throw HypothesisViolated("reduce_to_diagonal needs a symmetric space");
  if (!space.model_is_whole_sigma_set)
    throw HypothesisViolated(
        "reduce_to_diagonal requires the model to fill the sigma-set (catalog flag)");
  const Automorphism& sigma = *space.sigma;
  const MatrixK xh = xhat(sigma, x);
  const AdaptedDecomposition dec = adapted_svd(sigma, xh, tol);

  DiagonalReduction red{twist_automorphism(sigma, dec.theta), dec.svd.u,
                        dec.svd.v, dec.theta, dec.svd, dec.svd.d()};

  const double defect = frobenius_distance(red.sigma_prime(red.d), red.d);
  if (defect > 1e-8 * std::max(1.0, red.d.frobenius_norm()))
    throw HypothesisViolated("twisted automorphism does not fix the diagonal; defect " +
                             std::to_string(defect));
  return red;
}

CriticalBlockStructure critical_blocks_diagonal(const MatrixK& d, const MatrixK& a,
                                                const Tolerances& tol) {
  d.require_same_shape(a, "critical_blocks_diagonal");
  const int n = d.n();
  std::vector<double> diag(static_cast<std::size_t>(n));
  double offmass = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j) offmass += d.at(i, j).norm2();
    const Quat q = d.at(i, i);
    if (std::abs(q.x) + std::abs(q.y) + std::abs(q.z) > 0.0 || q.w < 0.0)
      throw InvalidInput("canonical diagonal must be real and non-negative");
    diag[static_cast<std::size_t>(i)] = q.w;
  }
  if (offmass > 0.0) throw InvalidInput("canonical diagonal must be diagonal");
  for (int i = 0; i + 1 < n; ++i)
    if (diag[static_cast<std::size_t>(i)] > diag[static_cast<std::size_t>(i + 1)] + 1e-14)
      throw InvalidInput("canonical diagonal must be ascending");

  const double scale = std::max(1.0, d.frobenius_norm());
  const CriticalCheck crit = is_critical_group(d, a, tol.criticality * scale);
  if (!crit.ok)
    throw NotCritical("input does not satisfy the critical equation; residual " +
                      std::to_string(crit.residual));

  CriticalBlockStructure out;
  std::vector<double> values;
  cluster_values(diag, tol.svd_gap, &out.block_sizes, &values);

  // Off-diagonal boxes must vanish at a critical point.
  std::vector<int> offsets(out.block_sizes.size() + 1, 0);
  for (std::size_t b = 0; b < out.block_sizes.size(); ++b)
    offsets[b + 1] = offsets[b] + out.block_sizes[b];
  double off = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::size_t bi = 0, bj = 0;
      while (offsets[bi + 1] <= i) ++bi;
      while (offsets[bj + 1] <= j) ++bj;
      if (bi != bj) off += a.at(i, j).norm2();
    }
  }
  out.off_diagonal_mass = std::sqrt(off);
  if (out.off_diagonal_mass > tol.equality * 10.0 * std::max(1.0, a.frobenius_norm()))
    throw StructureViolated("off-diagonal mass " +
                            std::to_string(out.off_diagonal_mass) +
                            " at a critical point of a canonical diagonal");

  double value = 0.0;
  for (std::size_t b = 0; b < out.block_sizes.size(); ++b) {
    const int sz = out.block_sizes[b];
    MatrixK box(a.field(), sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) box.at(i, j) = a.at(offsets[b] + i, offsets[b] + j);
    out.blocks.push_back(box);
    if (b == 0) {
      // Zero box: only unitarity is forced.
      if (sz > 0 && !is_in_group(box, 1e-7).ok)
        throw StructureViolated("zero box of a critical point is not unitary");
      out.signatures.emplace_back(0, 0);
      continue;
    }
    const MatrixK eye = MatrixK::identity(a.field(), sz);
    if (frobenius_distance(box, box.conj_transpose()) > 1e-7 ||
        frobenius_distance(box * box, eye) > 1e-7)
      throw StructureViolated("repeated-value box is not an Hermitian involution");
    const HermitianEigen eig = hermitian_eigen(box, tol);
    int plus = 0, minus = 0;
    for (double lam : eig.eigenvalues) (lam > 0.0 ? plus : minus)++;
    out.signatures.emplace_back(plus, minus);
    value += values[b - 1] * (plus - minus);
  }
  out.value = value;
  return out;
}

MorseReport is_morse_group(const MatrixK& x, const Tolerances& tol) {
  const CanonicalSVD svd = svd_canonical(x, tol);
  MorseReport rep;
  if (svd.zero_dim() > 0) {
    rep.morse = false;
    rep.reason = "zero singular value of multiplicity " +
                 std::to_string(svd.zero_dim());
    return rep;
  }
  for (std::size_t b = 1; b < svd.block_sizes.size(); ++b) {
    if (svd.block_sizes[b] > 1) {
      rep.morse = false;
      rep.reason = "repeated singular value " +
                   std::to_string(svd.values[b - 1]) + " of multiplicity " +
                   std::to_string(svd.block_sizes[b]);
      return rep;
    }
  }
  rep.morse = true;
  rep.reason = "singular values positive and pairwise distinct";
  return rep;
}

MorseReport is_morse_model_from_records(
    const std::vector<CriticalPointRecord>& records) {
  MorseReport rep;
  rep.morse = true;
  int degenerate = 0;
  for (const CriticalPointRecord& r : records)
    if (r.kernel_dim > 0) {
      rep.morse = false;
      ++degenerate;
    }
  rep.reason = rep.morse
                   ? "all " + std::to_string(records.size()) +
                         " located critical points have trivial Hessian kernel"
                   : std::to_string(degenerate) + " of " +
                         std::to_string(records.size()) +
                         " located critical points have nontrivial Hessian kernel";
  return rep;
}

}  // namespace symflow
