#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "symflow/matrix.hpp"
#include "symflow/tolerances.hpp"

namespace symflow {

enum class AnalyticFn { Exp, Sinh, Cosh };

// Eigen bridges. Quaternionic matrices go through the complex adjoint.
Eigen::MatrixXd to_real_eigen(const MatrixK& a);    // field R only
Eigen::MatrixXcd to_complex_eigen(const MatrixK& a);  // field R or C
MatrixK from_real_eigen(const Eigen::MatrixXd& m);
MatrixK from_complex_eigen(const Eigen::MatrixXcd& m, Field f = Field::C);

// Complex adjoint of a quaternionic matrix: writing A = A1 + A2 j with
// complex blocks, chi(A) = [[A1, A2], [-conj(A2), conj(A1)]]. A ring
// homomorphism compatible with conjugate transpose; singular values of
// chi(A) are those of A doubled in multiplicity.
MatrixK complex_adjoint(const MatrixK& a);  // field H -> 2n x 2n over C
// Inverse embedding; input must carry the chi block structure.
MatrixK quaternion_from_complex_adjoint(const Eigen::MatrixXcd& m);

std::vector<double> singular_values(const MatrixK& a);  // ascending
double smallest_singular_value(const MatrixK& a);

// Inverse. Quaternionic matrices are inverted through the complex adjoint.
// Throws SingularMatrix when the smallest singular value is below
// tol.singularity * max(1, |a|).
MatrixK mat_inverse(const MatrixK& a, const Tolerances& tol = Tolerances::defaults());

// exp, sinh, cosh by scaling-and-squaring on the quaternionic carrier;
// sinh/cosh are assembled as (exp(A) -+ exp(-A))/2. Dimensions here are
// tiny, so the series with relative cutoff tol.series is accurate and
// cheap. Throws NonConvergence if the series does not settle.
MatrixK mat_analytic(const MatrixK& a, AnalyticFn fn,
                     const Tolerances& tol = Tolerances::defaults());
MatrixK mat_exp(const MatrixK& a, const Tolerances& tol = Tolerances::defaults());

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  MatrixK vectors;                  // unitary; columns are eigenvectors
};

// Eigendecomposition of an Hermitian matrix over any of the three fields; the
// quaternionic case pairs the doubled complex-adjoint eigenvectors back
// into quaternionic columns.
HermitianEigen hermitian_eigen(const MatrixK& a,
                               const Tolerances& tol = Tolerances::defaults());

double min_eigenvalue_hermitian(const MatrixK& a,
                                const Tolerances& tol = Tolerances::defaults());

// Real coordinates of a matrix: entries row major, allowed components per
// field (w | w,x | w,x,y,z). re_trace_inner is the Euclidean dot product
// in these coordinates.
int real_dim(Field f, int n);
Eigen::VectorXd to_coords(const MatrixK& a);
MatrixK from_coords(Field f, int n, const Eigen::VectorXd& v);

// Orthonormal (for re_trace_inner) basis of the joint kernel of a family
// of R-linear constraint maps on n x n matrices over f.
std::vector<MatrixK> real_null_space(
    Field f, int n,
    const std::vector<std::function<MatrixK(const MatrixK&)>>& constraints,
    double null_tol = 1e-10);

}  // namespace symflow
