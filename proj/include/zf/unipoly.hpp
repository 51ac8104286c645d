#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zf/rational.hpp"

namespace zf {

/// Dense univariate polynomial over Q, coefficients indexed by degree.
/// The zero polynomial has no degree; degree() returns nullopt for it.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);
  UniPoly(int c) : UniPoly(Rational(c)) {}
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(const Rational& c, std::size_t k);
  /// The indeterminate itself.
  static UniPoly var();

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::optional<std::size_t> degree() const;
  /// Degree of a nonzero polynomial; throws on zero.
  std::size_t deg() const;

  /// Coefficient of t^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;
  const Rational& lc() const;
  std::span<const Rational> coeffs() const { return c_; }

  Rational operator()(const Rational& t) const;

  UniPoly monic() const;
  UniPoly derivative() const;
  /// p(q(t)).
  UniPoly compose(const UniPoly& q) const;
  /// t^n p(1/t); requires n >= deg p.
  UniPoly reversed(std::size_t n) const;
  /// p(t0 + t).
  UniPoly shifted(const Rational& t0) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly pow(const UniPoly& p, unsigned e);

/// Quotient and remainder with deg(rem) < deg(divisor). Throws on a zero divisor.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& p, const UniPoly& q);

/// Quotient of an exact division; throws std::logic_error on a nonzero remainder.
UniPoly exact_div(const UniPoly& p, const UniPoly& q);

/// Monic gcd. Throws when both inputs are zero.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

struct ExtendedGcd {
  UniPoly g;  ///< monic gcd
  UniPoly s;  ///< s*p + t*q = g
  UniPoly t;
};
ExtendedGcd xgcd(const UniPoly& p, const UniPoly& q);

/// Yun decomposition p = content * prod(factor_i ^ mult_i), factors monic,
/// squarefree and pairwise coprime.
struct SquarefreePart {
  Rational content;
  std::vector<std::pair<UniPoly, unsigned>> factors;

  UniPoly expand() const;
  /// Product of the distinct factors (the radical).
  UniPoly radical() const;
  /// Root multiplicities over the algebraic closure, one entry per root.
  std::vector<unsigned> multiplicity_pattern() const;
};
SquarefreePart squarefree_decompose(const UniPoly& p);

bool is_squarefree(const UniPoly& p);

/// (c, h) with p = c*h^2 and h monic, when such a pair exists.
std::optional<std::pair<Rational, UniPoly>> perfect_square(const UniPoly& p);

/// All distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Multiplicity of t0 as a root of p (p nonzero).
std::size_t root_multiplicity(const UniPoly& p, const Rational& t0);

/// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const UniPoly& p);

}  // namespace zf
