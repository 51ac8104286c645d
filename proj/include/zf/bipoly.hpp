#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zf/ratfunc.hpp"
#include "zf/unipoly.hpp"

namespace zf {

/// Polynomial in x whose coefficients (indexed by x-degree) live in a ring of
/// functions of t: UniPoly for Q[t][x], RatFunc for Q(t)[x].
template <class Coeff>
class XPoly {
 public:
  XPoly() = default;
  XPoly(const Coeff& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit XPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static XPoly x() { return XPoly(std::vector<Coeff>{Coeff(), Coeff(1)}); }

  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  std::size_t deg() const {
    if (c_.empty()) throw std::domain_error("x-degree of the zero polynomial");
    return c_.size() - 1;
  }
  Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(); }
  const Coeff& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  const std::vector<Coeff>& coeffs() const { return c_; }

  /// Substitute a function of t for x.
  Coeff operator()(const Coeff& x) const {
    Coeff acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  XPoly& operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return XPoly(std::move(r));
  }
  friend XPoly operator*(const Coeff& s, XPoly a) {
    for (auto& c : a.c_) c = s * c;
    a.trim();
    return a;
  }
  XPoly operator-() const {
    XPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using BiPoly = XPoly<UniPoly>;
using RatXPoly = XPoly<RatFunc>;

/// Division in Q(t)[x]; throws on a zero divisor.
std::pair<RatXPoly, RatXPoly> divrem(const RatXPoly& p, const RatXPoly& q);

/// Division in Q[t][x] by a divisor whose leading x-coefficient is 1.
std::pair<BiPoly, BiPoly> divrem_monic(const BiPoly& p, const BiPoly& q);

RatXPoly to_rat(const BiPoly& p);

/// Multiply through by the lcm of coefficient denominators.
BiPoly clear_denominators(const RatXPoly& p);

/// gcd over Q[t] of the x-coefficients (monic).
UniPoly content_t(const BiPoly& p);

/// p divided by its t-content, then scaled to integer coefficients with
/// content 1; sign fixed so the leading x-coefficient has a positive leading
/// t-coefficient.
BiPoly primitive_part(const BiPoly& p);

/// Total degree in (t, x); throws on zero.
std::size_t total_degree(const BiPoly& p);

/// Sylvester resultant eliminating x, via fraction-free (Bareiss) elimination.
UniPoly resultant_x(const BiPoly& f, const BiPoly& g);

/// Determinant of a square matrix over Q[t] by Bareiss elimination.
UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m);

std::vector<std::vector<UniPoly>> sylvester_matrix(const BiPoly& f, const BiPoly& g);

/// f(t, x) -> f(t, a*t + b*x + c) style substitution: x replaced by `xsub`
/// (a polynomial in t and x).
BiPoly substitute_x(const BiPoly& f, const BiPoly& xsub);

/// Evaluate at t = t0, giving a polynomial in x.
UniPoly eval_t(const BiPoly& f, const Rational& t0);

std::string to_string(const BiPoly& p);

}  // namespace zf
