#include "zf/bipoly.hpp"

#include <sstream>

namespace zf {

std::pair<RatXPoly, RatXPoly> divrem(const RatXPoly& p, const RatXPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero() || p.deg() < q.deg()) return {RatXPoly(), p};
  std::vector<RatFunc> rem = p.coeffs();
  const std::size_t dq = q.deg();
  const RatFunc inv = RatFunc(1) / q.lc();
  std::vector<RatFunc> quot(p.deg() - dq + 1);
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (rem[k].is_zero()) continue;
    RatFunc f = rem[k] * inv;
    quot[k - dq] = f;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= f * q.coeff(j);
  }
  rem.resize(dq);
  return {RatXPoly(std::move(quot)), RatXPoly(std::move(rem))};
}

std::pair<BiPoly, BiPoly> divrem_monic(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero() || !(q.lc() == UniPoly(1))) throw std::domain_error("divisor is not monic in x");
  if (p.is_zero() || p.deg() < q.deg()) return {BiPoly(), p};
  std::vector<UniPoly> rem = p.coeffs();
  const std::size_t dq = q.deg();
  std::vector<UniPoly> quot(p.deg() - dq + 1);
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (rem[k].is_zero()) continue;
    UniPoly f = rem[k];
    quot[k - dq] = f;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= f * q.coeff(j);
  }
  rem.resize(dq);
  return {BiPoly(std::move(quot)), BiPoly(std::move(rem))};
}

RatXPoly to_rat(const BiPoly& p) {
  std::vector<RatFunc> c;
  for (const auto& u : p.coeffs()) c.emplace_back(u);
  return RatXPoly(std::move(c));
}

BiPoly clear_denominators(const RatXPoly& p) {
  UniPoly l(1);
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    l = exact_div(l * c.den(), gcd(l, c.den()));
  }
  std::vector<UniPoly> out;
  for (const auto& c : p.coeffs()) out.push_back(exact_div(c.num() * l, c.den()));
  return BiPoly(std::move(out));
}

UniPoly content_t(const BiPoly& p) {
  if (p.is_zero()) throw std::domain_error("content of zero");
  UniPoly g;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
  }
  return g;
}

BiPoly primitive_part(const BiPoly& p) {
  UniPoly g = content_t(p);
  std::vector<UniPoly> out;
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    UniPoly q = exact_div(c, g);
    Integer d = denominator_lcm(q);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    out.push_back(std::move(q));
  }
  Integer h = 0;
  for (auto& q : out) {
    q *= Rational(l);
    for (const auto& c : q.coeffs()) mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), c.num().get_mpz_t());
  }
  Rational scale = Rational(Integer(1), h);
  if (out.back().lc().sign() < 0) scale = -scale;
  for (auto& q : out) q *= scale;
  return BiPoly(std::move(out));
}

std::size_t total_degree(const BiPoly& p) {
  if (p.is_zero()) throw std::domain_error("degree of zero");
  std::size_t d = 0;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const auto& c = p.coeffs()[k];
    if (!c.is_zero()) d = std::max(d, k + c.deg());
  }
  return d;
}

std::vector<std::vector<UniPoly>> sylvester_matrix(const BiPoly& f, const BiPoly& g) {
  const std::size_t m = f.deg(), n = g.deg(), size = m + n;
  std::vector<std::vector<UniPoly>> s(size, std::vector<UniPoly>(size));
  // Rows hold coefficients from the highest x-power down.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f.coeff(m - k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(n - k);
  return s;
}

UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly(1);
  bool negate = false;
  UniPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

UniPoly resultant_x(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant with a zero polynomial");
  if (f.deg() == 0 && g.deg() == 0) return UniPoly(1);
  if (f.deg() == 0) return pow(f.lc(), static_cast<unsigned>(g.deg()));
  if (g.deg() == 0) return pow(g.lc(), static_cast<unsigned>(f.deg()));
  return bareiss_det(sylvester_matrix(f, g));
}

BiPoly substitute_x(const BiPoly& f, const BiPoly& xsub) {
  BiPoly acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * xsub + BiPoly(*it);
  return acc;
}

UniPoly eval_t(const BiPoly& f, const Rational& t0) {
  std::vector<Rational> c;
  for (const auto& u : f.coeffs()) c.push_back(u(t0));
  return UniPoly(std::move(c));
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const UniPoly& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k >= 1) os << "*x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace zf
