#include "zf/unipoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace zf {

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::var() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

std::size_t UniPoly::deg() const {
  if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
  return c_.size() - 1;
}

Rational UniPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

const Rational& UniPoly::lc() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * lc().inverse();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += UniPoly(*it);
  }
  return acc;
}

UniPoly UniPoly::reversed(std::size_t n) const {
  if (is_zero()) return {};
  if (deg() > n) throw std::invalid_argument("reversal length below degree");
  std::vector<Rational> r(n + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) r[n - k] = c_[k];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::shifted(const Rational& t0) const {
  return compose(UniPoly(std::vector<Rational>{t0, Rational(1)}));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string UniPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly result(1), base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero() || p.deg() < q.deg()) return {UniPoly(), p};
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dq = q.deg();
  const Rational inv = q.lc().inverse();
  std::vector<Rational> quot(p.deg() - dq + 1);
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (rem[k].is_zero()) continue;
    Rational f = rem[k] * inv;
    quot[k - dq] = f;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= f * q.coeff(j);
  }
  rem.resize(dq);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& p, const UniPoly& q) {
  auto [quot, rem] = divrem(p, q);
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
  return quot;
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

ExtendedGcd xgcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  UniPoly r0 = p, r1 = q, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divrem(r0, r1);
    UniPoly s2 = s0 - quo * s1, t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = r0.lc().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly SquarefreePart::expand() const {
  UniPoly r(content);
  for (const auto& [f, m] : factors) r *= pow(f, m);
  return r;
}

UniPoly SquarefreePart::radical() const {
  UniPoly r(1);
  for (const auto& [f, m] : factors) r *= f;
  return r;
}

std::vector<unsigned> SquarefreePart::multiplicity_pattern() const {
  std::vector<unsigned> out;
  for (const auto& [f, m] : factors)
    for (std::size_t k = 0; k < f.deg(); ++k) out.push_back(m);
  std::sort(out.rbegin(), out.rend());
  return out;
}

SquarefreePart squarefree_decompose(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  SquarefreePart out;
  out.content = p.lc();
  UniPoly f = p.monic();
  if (f.deg() == 0) return out;
  // Yun's algorithm.
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(fp, a);
  UniPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.deg() > 0) {
    UniPoly g = d.is_zero() ? b : gcd(b, d);
    if (g.deg() > 0) out.factors.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.deg() == 0) return true;
  return gcd(p, p.derivative()).deg() == 0;
}

std::optional<std::pair<Rational, UniPoly>> perfect_square(const UniPoly& p) {
  if (p.is_zero()) return std::nullopt;
  SquarefreePart sf = squarefree_decompose(p);
  UniPoly h(1);
  for (const auto& [f, m] : sf.factors) {
    if (m % 2 != 0) return std::nullopt;
    h *= pow(f, m / 2);
  }
  return std::make_pair(sf.content, h);
}

namespace {

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<Rational> roots;
  if (p.deg() == 0) return roots;
  UniPoly f = squarefree_decompose(p).radical();
  // Strip the root at zero so the remaining roots are bounded away from it.
  if (f.coeff(0).is_zero()) {
    roots.emplace_back(0);
    f = exact_div(f, UniPoly::var());
  }
  if (f.deg() == 0) return roots;
  // Integer form: a rational root n/d in lowest terms has d | lead, so lead*root is an integer.
  UniPoly g = f * Rational(denominator_lcm(f));
  Rational lead = g.lc().abs();

  std::vector<UniPoly> chain{g, g.derivative()};
  while (!chain.back().is_zero() && chain.back().deg() > 0) {
    UniPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }

  Rational bound(1);
  for (std::size_t k = 0; k < g.deg(); ++k) {
    Rational q = (g.coeff(k) / g.lc()).abs() + Rational(1);
    if (q > bound) bound = q;
  }

  auto test_candidate = [&](const Rational& lo, const Rational& hi) {
    Integer klo = floor(lo * lead), khi = floor(hi * lead) + 1;
    for (Integer k = klo; k <= khi; ++k) {
      Rational cand(k, lead.num());
      if (cand > lo && cand <= hi && g(cand).is_zero()) roots.push_back(cand);
    }
  };

  const Rational width_goal = lead.inverse();
  std::function<void(const Rational&, const Rational&)> isolate = [&](const Rational& lo,
                                                                       const Rational& hi) {
    int n = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (n == 0) return;
    if (hi - lo < width_goal) {
      test_candidate(lo, hi);
      return;
    }
    Rational mid = (lo + hi) / Rational(2);
    isolate(lo, mid);
    isolate(mid, hi);
  };
  isolate(-bound, bound);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::size_t root_multiplicity(const UniPoly& p, const Rational& t0) {
  if (p.is_zero()) throw std::domain_error("root multiplicity in the zero polynomial");
  std::size_t m = 0;
  UniPoly q = p;
  const UniPoly lin(std::vector<Rational>{-t0, Rational(1)});
  while (q(t0).is_zero()) {
    q = exact_div(q, lin);
    ++m;
  }
  return m;
}

Integer denominator_lcm(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  return l;
}

}  // namespace zf
