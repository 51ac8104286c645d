#pragma once

#include <string>

#include "zf/unipoly.hpp"

namespace zf {

/// Element of Q(t) kept as num/den with monic denominator and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(int c) : RatFunc(Rational(c)) {}
  RatFunc(const UniPoly& p) : num_(p), den_(1) {}
  RatFunc(const UniPoly& num, const UniPoly& den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.deg() == 0; }

  /// deg(num) - deg(den): the pole order at infinity when positive.
  long degree() const;

  /// Order of vanishing at t0 (negative for a pole). Throws for zero.
  long valuation_at(const Rational& t0) const;

  /// Value at t0; throws on a pole.
  Rational operator()(const Rational& t0) const;

  /// f(t0 + tau) as a function of tau.
  RatFunc shifted(const Rational& t0) const;
  /// tau^weight * f(1/tau) as a function of tau.
  RatFunc at_infinity(long weight) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(std::string_view var = "t") const;

 private:
  void normalize();
  UniPoly num_, den_;
};

RatFunc pow(const RatFunc& f, unsigned e);

}  // namespace zf
