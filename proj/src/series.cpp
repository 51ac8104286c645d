#include "zf/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace zf {

Series Series::constant(const Rational& c, std::size_t precision) {
  Series s(precision);
  if (precision) s[0] = c;
  return s;
}

Series Series::from(const RatFunc& f, std::size_t precision) {
  Series num(precision), den(precision);
  for (std::size_t k = 0; k < precision; ++k) {
    num[k] = f.num().coeff(k);
    den[k] = f.den().coeff(k);
  }
  if (den[0].is_zero()) throw std::domain_error("series expansion at a pole");
  return num * den.inverse();
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return k;
  return std::nullopt;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.precision(), b.precision()));
  for (std::size_t k = 0; k < r.precision(); ++k) r[k] = a[k] + b[k];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.precision(), b.precision()));
  for (std::size_t k = 0; k < r.precision(); ++k) r[k] = a[k] - b[k];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.precision(), b.precision()));
  for (std::size_t i = 0; i < r.precision(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < r.precision(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Series Series::inverse() const {
  if (c_.empty() || c_[0].is_zero()) throw std::domain_error("series not invertible");
  Series r(precision());
  const Rational inv0 = c_[0].inverse();
  r[0] = inv0;
  for (std::size_t k = 1; k < precision(); ++k) {
    Rational s;
    for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r[k - j];
    r[k] = -s * inv0;
  }
  return r;
}

Series Series::sqrt1() const {
  if (c_.empty() || !c_[0].is_one()) throw std::domain_error("sqrt1 needs constant term 1");
  Series r(precision());
  r[0] = 1;
  // (r^2)_k = 2 r_k + sum_{0<j<k} r_j r_{k-j}
  for (std::size_t k = 1; k < precision(); ++k) {
    Rational s;
    for (std::size_t j = 1; j < k; ++j) s += r[j] * r[k - j];
    r[k] = (c_[k] - s) / Rational(2);
  }
  return r;
}

Series hensel_root(const Series& a2, const Series& a4, const Series& a6, const Rational& r0) {
  const std::size_t n = a2.precision();
  Series x = Series::constant(r0, n);
  const Series three = Series::constant(3, n), two = Series::constant(2, n);
  for (std::size_t step = 0; step < n + 1; ++step) {
    Series f = x * x * x + a2 * x * x + a4 * x + a6;
    if (!f.valuation()) break;
    Series df = three * x * x + two * a2 * x + a4;
    x = x - f * df.inverse();
  }
  return x;
}

}  // namespace zf
