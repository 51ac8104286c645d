#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zf/rational.hpp"

namespace zf {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Rational det(const RatMatrix& m);
/// Solution of m x = b for square invertible m; nullopt when singular.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// 3x3 helpers for projective coordinate changes.
RatVector cross(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace zf
