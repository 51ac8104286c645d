#include "zf/mpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zf {

MPoly MPoly::constant(const Rational& c, std::size_t nvars) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::var(std::size_t i, std::size_t nvars) {
  MPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != n_) throw std::invalid_argument("exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned MPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
  return true;
}

unsigned MPoly::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

Rational MPoly::operator()(const std::vector<Rational>& point) const {
  if (point.size() != n_) throw std::invalid_argument("point arity mismatch");
  Rational s;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < n_; ++i) m *= pow(point[i], e[i]);
    s += m;
  }
  return s;
}

MPoly MPoly::derivative(std::size_t i) const {
  MPoly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    r.add_term(f, c * Rational(e[i]));
  }
  return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& subs) const {
  if (subs.size() != n_) throw std::invalid_argument("substitution arity mismatch");
  const std::size_t m = subs.empty() ? n_ : subs[0].nvars();
  // Cache powers per variable.
  std::vector<std::vector<MPoly>> powers(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    powers[i].push_back(constant(1, m));
    for (unsigned k = 1; k <= degree_in(i); ++k) powers[i].push_back(powers[i].back() * subs[i]);
  }
  MPoly r(m);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(c, m);
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i]) t = t * powers[i][e[i]];
    r += t;
  }
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("variable count mismatch");
  MPoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const Rational& c, const MPoly& a) {
  MPoly r(a.n_);
  for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
  return r;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly r = MPoly::constant(1, p.nvars()), b = p;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool proportional(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [e0, c0] = *a.terms().begin();
  Rational bc = b.coeff(e0);
  if (bc.is_zero()) return false;
  return bc * a == c0 * b;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool mono = std::accumulate(e.begin(), e.end(), 0u) > 0;
    Rational a = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (!mono || !a.is_one()) {
      os << a;
      need_star = true;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      os << (need_star ? "*" : "") << names.at(i);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MPoly transform(const MPoly& form, const RatMatrix& m) {
  std::vector<MPoly> subs;
  for (std::size_t i = 0; i < 3; ++i) {
    MPoly row(3);
    for (std::size_t j = 0; j < 3; ++j) row += m(i, j) * MPoly::var(j, 3);
    subs.push_back(row);
  }
  return form.compose(subs);
}

BiPoly dehomogenize(const MPoly& form) {
  std::vector<std::vector<Rational>> c;
  for (const auto& [e, v] : form.terms()) {
    if (c.size() <= e[1]) c.resize(e[1] + 1);
    auto& row = c[e[1]];
    if (row.size() <= e[0]) row.resize(e[0] + 1);
    row[e[0]] += v;
  }
  std::vector<UniPoly> out;
  for (auto& row : c) out.emplace_back(std::move(row));
  return BiPoly(std::move(out));
}

MPoly homogenize(const BiPoly& f, unsigned degree) {
  MPoly r(3);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const auto cs = f.coeffs()[k].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j].is_zero()) continue;
      if (j + k > degree) throw std::invalid_argument("degree exceeds homogenization degree");
      r.add_term({static_cast<unsigned>(j), static_cast<unsigned>(k), static_cast<unsigned>(degree - j - k)}, cs[j]);
    }
  }
  return r;
}

RatVector gradient_at(const MPoly& form, const RatVector& point) {
  RatVector g;
  for (std::size_t i = 0; i < form.nvars(); ++i) g.push_back(form.derivative(i)(point));
  return g;
}

MPoly gradient_dot(const MPoly& form, const RatVector& v) {
  MPoly r(form.nvars());
  for (std::size_t i = 0; i < form.nvars(); ++i) r += v[i] * form.derivative(i);
  return r;
}

}  // namespace zf
