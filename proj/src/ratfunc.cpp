#include "zf/ratfunc.hpp"

#include <stdexcept>

namespace zf {

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  UniPoly g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rational inv = den_.lc().inverse();
  num_ *= inv;
  den_ *= inv;
}

long RatFunc::degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero rational function");
  return static_cast<long>(num_.deg()) - static_cast<long>(den_.deg());
}

long RatFunc::valuation_at(const Rational& t0) const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  return static_cast<long>(root_multiplicity(num_, t0)) -
         static_cast<long>(root_multiplicity(den_, t0));
}

Rational RatFunc::operator()(const Rational& t0) const {
  Rational d = den_(t0);
  if (d.is_zero()) throw std::domain_error("evaluation at a pole");
  return num_(t0) / d;
}

RatFunc RatFunc::shifted(const Rational& t0) const {
  return RatFunc(num_.shifted(t0), den_.shifted(t0));
}

RatFunc RatFunc::at_infinity(long weight) const {
  if (is_zero()) return {};
  const std::size_t n = num_.deg(), d = den_.deg();
  // f(1/tau) = tau^(d-n) * rev(num)/rev(den)
  UniPoly rn = num_.reversed(n), rd = den_.reversed(d);
  long shift = weight + static_cast<long>(d) - static_cast<long>(n);
  if (shift >= 0) return RatFunc(rn * UniPoly::monomial(1, static_cast<std::size_t>(shift)), rd);
  return RatFunc(rn, rd * UniPoly::monomial(1, static_cast<std::size_t>(-shift)));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RatFunc::str(std::string_view var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFunc pow(const RatFunc& f, unsigned e) {
  RatFunc r(1);
  for (unsigned k = 0; k < e; ++k) r *= f;
  return r;
}

}  // namespace zf
