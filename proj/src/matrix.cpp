#include "symflow/matrix.hpp"

#include <cmath>

namespace symflow {

MatrixK::MatrixK(Field f, int n) : field_(f), n_(n) {
  if (n < 0) throw InvalidInput("matrix dimension must be non-negative");
  e_.assign(static_cast<std::size_t>(n) * n, Quat());
}

MatrixK MatrixK::identity(Field f, int n) {
  MatrixK m(f, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Quat(1.0);
  return m;
}

MatrixK MatrixK::diagonal(Field f, const std::vector<double>& d) {
  MatrixK m(f, static_cast<int>(d.size()));
  for (int i = 0; i < m.n(); ++i) m.at(i, i) = Quat(d[static_cast<std::size_t>(i)]);
  return m;
}

MatrixK MatrixK::diagonal(Field f, std::initializer_list<Quat> d) {
  MatrixK m(f, static_cast<int>(d.size()));
  int i = 0;
  for (const Quat& q : d) m.at(i, i) = q, ++i;
  if (!m.entries_fit_field())
    throw InvalidInput("diagonal entries do not fit the requested field");
  return m;
}

MatrixK MatrixK::scalar(Field f, int n, const Quat& q) {
  MatrixK m(f, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = q;
  if (!m.entries_fit_field())
    throw InvalidInput("scalar entry does not fit the requested field");
  return m;
}

void MatrixK::require_same_shape(const MatrixK& o, const char* what) const {
  if (!same_shape(o))
    throw DimensionMismatch(std::string(what) + ": field or dimension mismatch");
}

void MatrixK::require_field(Field f, const char* what) const {
  if (field_ != f)
    throw InvalidInput(std::string(what) + ": expected field " + field_name(f) +
                       ", got " + field_name(field_));
}

MatrixK MatrixK::conj_transpose() const {
  MatrixK r(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i).conj();
  return r;
}

double MatrixK::re_trace() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += at(i, i).w;
  return s;
}

double MatrixK::frobenius_norm() const {
  double s = 0.0;
  for (const Quat& q : e_) s += q.norm2();
  return std::sqrt(s);
}

bool MatrixK::entries_fit_field() const {
  for (const Quat& q : e_)
    if (!q.fits_field(field_)) return false;
  return true;
}

MatrixK MatrixK::operator-() const {
  MatrixK r(field_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = -e_[t];
  return r;
}

MatrixK MatrixK::operator+(const MatrixK& o) const {
  require_same_shape(o, "matrix addition");
  MatrixK r(field_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] + o.e_[t];
  return r;
}

MatrixK MatrixK::operator-(const MatrixK& o) const {
  require_same_shape(o, "matrix subtraction");
  MatrixK r(field_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] - o.e_[t];
  return r;
}

MatrixK MatrixK::operator*(const MatrixK& o) const {
  require_same_shape(o, "matrix product");
  MatrixK r(field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int l = 0; l < n_; ++l) {
      const Quat& a = at(i, l);
      if (a.norm2() == 0.0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(l, j);
    }
  }
  return r;
}

MatrixK MatrixK::operator*(double s) const {
  MatrixK r(field_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] * s;
  return r;
}

MatrixK& MatrixK::operator+=(const MatrixK& o) { return *this = *this + o; }
MatrixK& MatrixK::operator-=(const MatrixK& o) { return *this = *this - o; }

MatrixK MatrixK::scaled_left(const Quat& q) const {
  MatrixK r(field_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = q * e_[t];
  return r;
}

MatrixK MatrixK::scaled_right(const Quat& q) const {
  MatrixK r(field_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] * q;
  return r;
}

MatrixK MatrixK::entrywise_conj() const {
  MatrixK r(field_, n_);
  for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t].conj();
  return r;
}

MatrixK conj_transpose(const MatrixK& a) { return a.conj_transpose(); }

double re_trace_inner(const MatrixK& x, const MatrixK& y) {
  x.require_same_shape(y, "re_trace_inner");
  // Re Tr(x* y) = sum over entries of the real dot product of components.
  double s = 0.0;
  for (int i = 0; i < x.n(); ++i) {
    for (int j = 0; j < x.n(); ++j) {
      const Quat& a = x.at(i, j);
      const Quat& b = y.at(i, j);
      s += a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
    }
  }
  return s;
}

double frobenius_distance(const MatrixK& a, const MatrixK& b) {
  return (a - b).frobenius_norm();
}

}  // namespace symflow
