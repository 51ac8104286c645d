#include "zf/quotient_ring.hpp"

#include <stdexcept>

namespace zf {

QuotientRing::QuotientRing(const UniPoly& modulus) : m_(modulus.monic()) {
  const std::size_t n = m_.deg();
  if (n == 0) throw std::invalid_argument("quotient by a constant");
  // Newton identities for the power sums of the roots of m.
  power_sums_.resize(n);
  power_sums_[0] = Rational(static_cast<long>(n));
  for (std::size_t k = 1; k < n; ++k) {
    Rational s = -Rational(static_cast<long>(k)) * m_.coeff(n - k);
    for (std::size_t i = 1; i < k; ++i) s -= m_.coeff(n - i) * power_sums_[k - i];
    power_sums_[k] = s;
  }
}

UniPoly QuotientRing::reduce(const UniPoly& a) const { return divrem(a, m_).second; }

UniPoly QuotientRing::mul(const UniPoly& a, const UniPoly& b) const { return reduce(a * b); }

std::optional<UniPoly> QuotientRing::inverse(const UniPoly& a) const {
  UniPoly r = reduce(a);
  if (r.is_zero()) return std::nullopt;
  ExtendedGcd e = xgcd(r, m_);
  if (e.g.deg() != 0) return std::nullopt;
  return reduce(e.s);
}

Rational QuotientRing::trace(const UniPoly& a) const {
  UniPoly r = reduce(a);
  Rational s;
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) s += r.coeffs()[k] * power_sums_[k];
  return s;
}

BiPoly reduce_coeffs(const BiPoly& p, const UniPoly& m) {
  std::vector<UniPoly> c;
  for (const auto& u : p.coeffs()) c.push_back(divrem(u, m).second);
  return BiPoly(std::move(c));
}

namespace {

void monic_rec(const UniPoly& m, const BiPoly& p, std::vector<GcdBranch>& out) {
  BiPoly q = reduce_coeffs(p, m);
  if (q.is_zero()) {
    out.push_back({m, q});
    return;
  }
  UniPoly g = gcd(q.lc(), m);
  if (g.deg() > 0) {
    monic_rec(g, q, out);
    monic_rec(exact_div(m, g), q, out);
    return;
  }
  QuotientRing ring(m);
  BiPoly r = reduce_coeffs(*ring.inverse(q.lc()) * q, m);
  out.push_back({m, r});
}

void gcd_rec(const UniPoly& m, BiPoly a, BiPoly b, std::vector<GcdBranch>& out) {
  a = reduce_coeffs(a, m);
  b = reduce_coeffs(b, m);
  while (!b.is_zero()) {
    UniPoly g = gcd(b.lc(), m);
    if (g.deg() > 0) {
      gcd_rec(g, a, b, out);
      gcd_rec(exact_div(m, g), a, b, out);
      return;
    }
    QuotientRing ring(m);
    b = reduce_coeffs(*ring.inverse(b.lc()) * b, m);
    // b is monic now, so plain pseudo-free division works over the ring.
    const std::size_t db = b.deg();
    std::vector<UniPoly> r = a.coeffs();
    for (std::size_t k = r.size(); k-- > db;) {
      if (r[k].is_zero()) continue;
      UniPoly f = r[k];
      for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = ring.reduce(r[k - db + j] - f * b.coeff(j));
    }
    if (r.size() > db) r.resize(db);
    a = std::move(b);
    b = BiPoly(std::move(r));
  }
  monic_rec(m, a, out);
}

}  // namespace

std::vector<GcdBranch> split_gcd(const UniPoly& m, const std::vector<BiPoly>& polys) {
  if (m.is_zero() || m.deg() == 0) throw std::invalid_argument("split_gcd needs a nonconstant modulus");
  std::vector<GcdBranch> cur{{m.monic(), BiPoly()}};
  for (const auto& p : polys) {
    std::vector<GcdBranch> next;
    for (const auto& br : cur) gcd_rec(br.modulus, br.gcd, p, next);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace zf
