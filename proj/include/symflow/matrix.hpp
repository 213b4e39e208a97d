#pragma once

#include <initializer_list>
#include <vector>

#include "symflow/scalar.hpp"

namespace symflow {

// Dense square matrix over R, C or H with a runtime field tag. This is the
// universal carrier for group elements, tangent vectors, directions and
// decomposition factors. Value semantics throughout; all operations are
// pure, so instances are safe to share across threads.
class MatrixK {
 public:
  MatrixK() = default;
  MatrixK(Field f, int n);  // zero matrix

  static MatrixK zero(Field f, int n) { return MatrixK(f, n); }
  static MatrixK identity(Field f, int n);
  static MatrixK diagonal(Field f, const std::vector<double>& d);
  static MatrixK diagonal(Field f, std::initializer_list<Quat> d);
  static MatrixK scalar(Field f, int n, const Quat& q);

  Field field() const { return field_; }
  int n() const { return n_; }
  bool empty() const { return n_ == 0; }

  Quat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Quat& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  MatrixK conj_transpose() const;
  double re_trace() const;
  double frobenius_norm() const;
  bool entries_fit_field() const;

  MatrixK operator-() const;
  MatrixK operator+(const MatrixK& o) const;
  MatrixK operator-(const MatrixK& o) const;
  MatrixK operator*(const MatrixK& o) const;
  MatrixK operator*(double s) const;
  MatrixK& operator+=(const MatrixK& o);
  MatrixK& operator-=(const MatrixK& o);
  // Entrywise scaling by a quaternion, i.e. multiplication by the central
  // scalar matrix qI from the given side. The two coincide for R and C.
  MatrixK scaled_left(const Quat& q) const;
  MatrixK scaled_right(const Quat& q) const;
  // Entrywise conjugation of every entry.
  MatrixK entrywise_conj() const;

  bool same_shape(const MatrixK& o) const {
    return field_ == o.field_ && n_ == o.n_;
  }
  void require_same_shape(const MatrixK& o, const char* what) const;
  void require_field(Field f, const char* what) const;

 private:
  Field field_ = Field::R;
  int n_ = 0;
  std::vector<Quat> e_;
};

inline MatrixK operator*(double s, const MatrixK& m) { return m * s; }

MatrixK conj_transpose(const MatrixK& a);

// Real part of Tr(x* y): the Euclidean inner product on the real
// coordinates of the entries. Symmetric and positive definite over all
// three fields.
double re_trace_inner(const MatrixK& x, const MatrixK& y);

double frobenius_distance(const MatrixK& a, const MatrixK& b);

}  // namespace symflow
