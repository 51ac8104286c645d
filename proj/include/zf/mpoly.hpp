#pragma once

#include <map>
#include <string>
#include <vector>

#include "zf/bipoly.hpp"
#include "zf/linalg.hpp"
#include "zf/rational.hpp"

namespace zf {

using Exponent = std::vector<unsigned>;

/// Sparse polynomial over Q in a fixed number of variables.
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 3) : n_(nvars) {}
  static MPoly constant(const Rational& c, std::size_t nvars);
  static MPoly var(std::size_t i, std::size_t nvars);

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Total degree; throws on zero.
  unsigned degree() const;
  bool is_homogeneous() const;
  Rational operator()(const std::vector<Rational>& point) const;
  MPoly derivative(std::size_t i) const;
  /// Substitute subs[i] for variable i; all substitutes share one variable count.
  MPoly compose(const std::vector<MPoly>& subs) const;
  /// Largest exponent of variable i; 0 for zero.
  unsigned degree_in(std::size_t i) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, const MPoly& a);
  MPoly operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t n_;
  std::map<Exponent, Rational> terms_;
};

MPoly pow(const MPoly& p, unsigned e);

/// a = c * b for some nonzero rational c.
bool proportional(const MPoly& a, const MPoly& b);

// Ternary forms use the variable order (T, X, Z); affine charts use t = T/Z, x = X/Z.
inline const std::vector<std::string> kProjNames{"T", "X", "Z"};

/// F(M v) for the column-vector convention v = (T, X, Z).
MPoly transform(const MPoly& form, const RatMatrix& m);
/// Z = 1, giving a polynomial in x over Q[t].
BiPoly dehomogenize(const MPoly& form);
/// Homogenize a polynomial in (t, x) to the given degree using Z.
MPoly homogenize(const BiPoly& f, unsigned degree);
/// Directional derivative sum_i v_i dF/dv_i.
MPoly gradient_dot(const MPoly& form, const RatVector& v);
RatVector gradient_at(const MPoly& form, const RatVector& point);

}  // namespace zf
