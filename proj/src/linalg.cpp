#include "zf/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace zf {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix shape mismatch");
  RatVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Row-reduces [m | rhs] in place; returns the determinant of m.
Rational eliminate(RatMatrix& m, RatMatrix* rhs) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("square matrix required");
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(p, j), (*rhs)(c, j));
      d = -d;
    }
    const Rational piv = m(c, c);
    d *= piv;
    const Rational inv = piv.inverse();
    for (std::size_t j = 0; j < n; ++j) m(c, j) *= inv;
    if (rhs)
      for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(c, j);
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(c, j);
    }
  }
  return d;
}

}  // namespace

Rational det(const RatMatrix& m) {
  RatMatrix w = m;
  return eliminate(w, nullptr);
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  RatMatrix w = m, rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (eliminate(w, &rhs).is_zero()) return std::nullopt;
  RatVector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  RatMatrix w = m, rhs = RatMatrix::identity(m.rows());
  if (eliminate(w, &rhs).is_zero()) return std::nullopt;
  return rhs;
}

RatVector cross(const RatVector& a, const RatVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace zf
