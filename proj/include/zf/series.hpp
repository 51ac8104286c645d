#pragma once

#include <optional>
#include <vector>

#include "zf/ratfunc.hpp"

namespace zf {

/// Power series in tau over Q truncated at O(tau^precision).
class Series {
 public:
  explicit Series(std::size_t precision) : c_(precision) {}
  Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
  static Series constant(const Rational& c, std::size_t precision);
  /// Expansion at tau = 0; throws if f has a pole there.
  static Series from(const RatFunc& f, std::size_t precision);

  std::size_t precision() const { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational& operator[](std::size_t k) { return c_[k]; }

  /// Order of the first nonzero coefficient; nullopt if zero to this precision.
  std::optional<std::size_t> valuation() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;
  /// Requires a nonzero constant term.
  Series inverse() const;
  /// Square root with constant term 1; requires constant term 1.
  Series sqrt1() const;

 private:
  std::vector<Rational> c_;
};

/// The root of x^3 + a2 x^2 + a4 x + a6 lifting the simple root r0 of the
/// reduction at tau = 0 (Newton iteration).
Series hensel_root(const Series& a2, const Series& a4, const Series& a6, const Rational& r0);

}  // namespace zf
