#include "symflow/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "symflow/errors.hpp"

namespace symflow {

namespace {

using Cplx = std::complex<double>;

// Quaternion entry as the complex pair (a, b) with q = a + b j.
Cplx part1(const Quat& q) { return {q.w, q.x}; }
Cplx part2(const Quat& q) { return {q.y, q.z}; }
Quat from_parts(const Cplx& a, const Cplx& b) {
  return {a.real(), a.imag(), b.real(), b.imag()};
}

Eigen::MatrixXcd chi_of(const MatrixK& a) {
  const int n = a.n();
  Eigen::MatrixXcd m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cplx a1 = part1(a.at(i, j));
      const Cplx a2 = part2(a.at(i, j));
      m(i, j) = a1;
      m(i, n + j) = a2;
      m(n + i, j) = -std::conj(a2);
      m(n + i, n + j) = std::conj(a1);
    }
  }
  return m;
}

// Column c of chi(U) determines the quaternionic column u = a - conj(b) j,
// where the complex 2n-vector is [a; b].
void set_quat_column(MatrixK& u, int col, const Eigen::VectorXcd& v) {
  const int n = u.n();
  for (int r = 0; r < n; ++r)
    u.at(r, col) = from_parts(v(r), -std::conj(v(n + r)));
}

// Right multiplication by j on the complex-adjoint column: v -> J conj(v)
// with J = [[0, I], [-I, 0]].
Eigen::VectorXcd j_partner(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size()) / 2;
  Eigen::VectorXcd w(2 * n);
  w.head(n) = v.tail(n).conjugate();
  w.tail(n) = -v.head(n).conjugate();
  return w;
}

std::vector<double> singular_values_desc_complex(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  std::vector<double> s(svd.singularValues().data(),
                        svd.singularValues().data() + svd.singularValues().size());
  return s;
}

}  // namespace

Eigen::MatrixXd to_real_eigen(const MatrixK& a) {
  a.require_field(Field::R, "to_real_eigen");
  Eigen::MatrixXd m(a.n(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) m(i, j) = a.at(i, j).w;
  return m;
}

Eigen::MatrixXcd to_complex_eigen(const MatrixK& a) {
  if (a.field() == Field::H)
    throw InvalidInput("to_complex_eigen: quaternionic input needs complex_adjoint");
  Eigen::MatrixXcd m(a.n(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) m(i, j) = part1(a.at(i, j));
  return m;
}

MatrixK from_real_eigen(const Eigen::MatrixXd& m) {
  MatrixK a(Field::R, static_cast<int>(m.rows()));
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) a.at(i, j) = Quat(m(i, j));
  return a;
}

MatrixK from_complex_eigen(const Eigen::MatrixXcd& m, Field f) {
  MatrixK a(f, static_cast<int>(m.rows()));
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      a.at(i, j) = Quat(m(i, j).real(), m(i, j).imag());
  if (!a.entries_fit_field())
    throw InvalidInput("from_complex_eigen: entries have nonzero imaginary part");
  return a;
}

MatrixK complex_adjoint(const MatrixK& a) {
  a.require_field(Field::H, "complex_adjoint");
  return from_complex_eigen(chi_of(a), Field::C);
}

MatrixK quaternion_from_complex_adjoint(const Eigen::MatrixXcd& m) {
  const int n2 = static_cast<int>(m.rows());
  if (n2 % 2 != 0 || m.cols() != n2)
    throw DimensionMismatch("complex adjoint must be square of even dimension");
  const int n = n2 / 2;
  MatrixK a(Field::H, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = from_parts(m(i, j), m(i, n + j));
  return a;
}

std::vector<double> singular_values(const MatrixK& a) {
  std::vector<double> s;
  switch (a.field()) {
    case Field::R: {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_real_eigen(a));
      s.assign(svd.singularValues().data(),
               svd.singularValues().data() + svd.singularValues().size());
      break;
    }
    case Field::C:
      s = singular_values_desc_complex(to_complex_eigen(a));
      break;
    case Field::H: {
      // chi doubles each singular value; keep one copy per pair.
      std::vector<double> d = singular_values_desc_complex(chi_of(a));
      for (std::size_t t = 0; t < d.size(); t += 2)
        s.push_back(0.5 * (d[t] + d[t + 1]));
      break;
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

double smallest_singular_value(const MatrixK& a) {
  if (a.n() == 0) return 0.0;
  return singular_values(a).front();
}

MatrixK mat_inverse(const MatrixK& a, const Tolerances& tol) {
  if (a.n() == 0) return a;
  const double cutoff = tol.singularity * std::max(1.0, a.frobenius_norm());
  if (smallest_singular_value(a) < cutoff)
    throw SingularMatrix("matrix is singular to working tolerance");
  switch (a.field()) {
    case Field::R:
      return from_real_eigen(to_real_eigen(a).partialPivLu().inverse());
    case Field::C:
      return from_complex_eigen(to_complex_eigen(a).partialPivLu().inverse());
    case Field::H:
      return quaternion_from_complex_adjoint(chi_of(a).partialPivLu().inverse());
  }
  throw InvalidInput("mat_inverse: unknown field");
}

MatrixK mat_exp(const MatrixK& a, const Tolerances& tol) {
  const int n = a.n();
  const double norm = a.frobenius_norm();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);
  const MatrixK b = a * scale;

  MatrixK sum = MatrixK::identity(a.field(), n);
  MatrixK term = MatrixK::identity(a.field(), n);
  constexpr int kMaxTerms = 300;
  bool converged = false;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * b * (1.0 / k);
    sum += term;
    if (term.frobenius_norm() <= tol.series * std::max(1.0, sum.frobenius_norm())) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NonConvergence("matrix exponential series did not reach tolerance");
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

MatrixK mat_analytic(const MatrixK& a, AnalyticFn fn, const Tolerances& tol) {
  switch (fn) {
    case AnalyticFn::Exp:
      return mat_exp(a, tol);
    case AnalyticFn::Sinh:
      return (mat_exp(a, tol) - mat_exp(-a, tol)) * 0.5;
    case AnalyticFn::Cosh:
      return (mat_exp(a, tol) + mat_exp(-a, tol)) * 0.5;
  }
  throw InvalidInput("mat_analytic: unknown function");
}

namespace {

HermitianEigen hermitian_eigen_quaternion(const MatrixK& a) {
  const int n = a.n();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(chi_of(a));
  if (es.info() != Eigen::Success)
    throw NonConvergence("hermitian eigendecomposition failed");
  const Eigen::VectorXd lam = es.eigenvalues();
  const Eigen::MatrixXcd vecs = es.eigenvectors();

  // Eigenvalues of chi come in pairs; each pair carries one quaternionic
  // eigenvector line spanned (over C) by a column v and its j-partner.
  HermitianEigen out;
  out.vectors = MatrixK(Field::H, n);
  std::vector<Eigen::VectorXcd> accepted;
  int next = 0;
  for (int c = 0; c < 2 * n && next < n; ++c) {
    Eigen::VectorXcd v = vecs.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : accepted) v -= u.dot(v) * u;
    const double nv = v.norm();
    if (nv < 0.5) continue;  // already covered by a previous pair
    v /= nv;
    Eigen::VectorXcd w = j_partner(v);
    for (const auto& u : accepted) w -= u.dot(w) * u;
    w.normalize();
    set_quat_column(out.vectors, next, v);
    out.eigenvalues.push_back(lam(c));
    accepted.push_back(v);
    accepted.push_back(w);
    ++next;
  }
  if (next != n)
    throw NonConvergence("quaternionic eigenvector pairing failed");
  return out;
}

}  // namespace

HermitianEigen hermitian_eigen(const MatrixK& a, const Tolerances& tol) {
  const double herm = frobenius_distance(a, a.conj_transpose());
  if (herm > 1e-8 * std::max(1.0, a.frobenius_norm()))
    throw InvalidInput("hermitian_eigen: input is not Hermitian");
  (void)tol;
  switch (a.field()) {
    case Field::R: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_real_eigen(a));
      if (es.info() != Eigen::Success)
        throw NonConvergence("hermitian eigendecomposition failed");
      HermitianEigen out;
      out.eigenvalues.assign(es.eigenvalues().data(),
                             es.eigenvalues().data() + a.n());
      out.vectors = from_real_eigen(es.eigenvectors());
      return out;
    }
    case Field::C: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_complex_eigen(a));
      if (es.info() != Eigen::Success)
        throw NonConvergence("hermitian eigendecomposition failed");
      HermitianEigen out;
      out.eigenvalues.assign(es.eigenvalues().data(),
                             es.eigenvalues().data() + a.n());
      out.vectors = from_complex_eigen(es.eigenvectors());
      return out;
    }
    case Field::H:
      return hermitian_eigen_quaternion(a);
  }
  throw InvalidInput("hermitian_eigen: unknown field");
}

double min_eigenvalue_hermitian(const MatrixK& a, const Tolerances& tol) {
  if (a.n() == 0) return 0.0;
  return hermitian_eigen(a, tol).eigenvalues.front();
}

int real_dim(Field f, int n) { return field_dim(f) * n * n; }

Eigen::VectorXd to_coords(const MatrixK& a) {
  const int d = field_dim(a.field());
  Eigen::VectorXd v(real_dim(a.field(), a.n()));
  int t = 0;
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      const Quat& q = a.at(i, j);
      v(t++) = q.w;
      if (d > 1) v(t++) = q.x;
      if (d > 2) {
        v(t++) = q.y;
        v(t++) = q.z;
      }
    }
  }
  return v;
}

MatrixK from_coords(Field f, int n, const Eigen::VectorXd& v) {
  if (v.size() != real_dim(f, n))
    throw DimensionMismatch("from_coords: wrong coordinate count");
  const int d = field_dim(f);
  MatrixK a(f, n);
  int t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Quat q;
      q.w = v(t++);
      if (d > 1) q.x = v(t++);
      if (d > 2) {
        q.y = v(t++);
        q.z = v(t++);
      }
      a.at(i, j) = q;
    }
  }
  return a;
}

std::vector<MatrixK> real_null_space(
    Field f, int n,
    const std::vector<std::function<MatrixK(const MatrixK&)>>& constraints,
    double null_tol) {
  const int cols = real_dim(f, n);
  const int rows = cols * static_cast<int>(constraints.size());
  Eigen::MatrixXd m(rows, cols);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(cols);
  for (int c = 0; c < cols; ++c) {
    e(c) = 1.0;
    const MatrixK basis = from_coords(f, n, e);
    int r0 = 0;
    for (const auto& constraint : constraints) {
      m.block(r0, c, cols, 1) = to_coords(constraint(basis));
      r0 += cols;
    }
    e(c) = 0.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = null_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  std::vector<MatrixK> basis;
  for (int c = 0; c < cols; ++c) {
    const double s = c < sv.size() ? sv(c) : 0.0;
    if (s <= cutoff) basis.push_back(from_coords(f, n, svd.matrixV().col(c)));
  }
  return basis;
}

}  // namespace symflow
