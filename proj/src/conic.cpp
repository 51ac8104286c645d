#include "zf/conic.hpp"

#include <array>
#include <random>

#include "zf/errors.hpp"
#include "zf/quotient_ring.hpp"

namespace zf {

RatMatrix conic_matrix(const MPoly& form) {
  if (form.nvars() != 3 || form.is_zero() || !form.is_homogeneous() || form.degree() != 2)
    throw InputError("expected a homogeneous quadratic in T, X, Z");
  RatMatrix m(3, 3);
  for (const auto& [e, c] : form.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = c;
    } else {
      m(idx[0], idx[1]) = m(idx[1], idx[0]) = c / Rational(2);
    }
  }
  return m;
}

bool is_smooth_conic(const MPoly& form) { return !det(conic_matrix(form)).is_zero(); }

MPoly primitive_form(const MPoly& form) {
  if (form.is_zero()) throw InputError("zero form");
  Integer l = 1, g = 0;
  for (const auto& [e, c] : form.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  for (const auto& [e, c] : form.terms()) {
    Integer n = (c * Rational(l)).num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale = Rational(l) / Rational(g);
  // Sign: leading term in the X-major order.
  Exponent best;
  Rational lead;
  for (const auto& [e, c] : form.terms()) {
    Exponent key{e[1], e[0], e[2]};
    if (best.empty() || key > best) {
      best = key;
      lead = c;
    }
  }
  if (lead.sign() < 0) scale = -scale;
  return scale * form;
}

RatXPoly bisection_quotient(const FFPoint& P, const RatFunc& r, const SurfaceModel& s) {
  if (P.is_origin()) throw InputError("bisection needs a finite section");
  if (!s.on_curve(P)) throw InputError("section is not on the curve");
  RatXPoly F = to_rat(s.quartic().affine());
  RatXPoly xm = RatXPoly::x() - RatXPoly(P.x);
  RatXPoly l = r * xm + RatXPoly(P.y);
  auto [g, rem] = divrem(F - l * l, xm);
  if (!rem.is_zero()) throw VerificationError("F - l^2 is not divisible by x - x(t)");
  return g;
}

namespace {

std::optional<MPoly> provenance_lift(const FFPoint& P, const RatFunc& r) {
  if (!r.is_polynomial() || !P.x.is_polynomial() || !P.y.is_polynomial()) return std::nullopt;
  BiPoly l = BiPoly(std::vector<UniPoly>{P.y.num() - r.num() * P.x.num(), r.num()});
  if (l.is_zero() || total_degree(l) > 2) return std::nullopt;
  return homogenize(l, 2);
}

}  // namespace

ConicCurve bisect_conic(const FFPoint& P, const RatFunc& r, const SurfaceModel& s, std::string name) {
  RatXPoly g = bisection_quotient(P, r, s);
  BiPoly cleared = primitive_part(clear_denominators(g));
  if (cleared.deg() != 2 || total_degree(cleared) != 2)
    throw VerificationError("C(r, P) is not a conic (total degree " + std::to_string(total_degree(cleared)) + ")");
  ConicCurve c;
  c.name = std::move(name);
  c.form = primitive_form(homogenize(cleared, 2));
  if (!is_smooth_conic(c.form)) throw VerificationError("C(r, P) is a singular conic");
  c.provenance = ConicProvenance{r, P, {}, {}};
  c.lift = provenance_lift(P, r);
  return c;
}

MPoly bisect_family(const FFPoint& P, const UniPoly& r0, const UniPoly& r1, const SurfaceModel& s) {
  if (!P.x.is_polynomial() || !P.y.is_polynomial()) throw UnsupportedError("family display needs a polynomial section");
  // g = (F - y_P^2)/(x - x_P) - 2 r y_P - r^2 (x - x_P), expanded in a.
  auto [q0, rem] = divrem_monic(s.quartic().affine() - BiPoly(P.y.num() * P.y.num()), BiPoly(std::vector<UniPoly>{-P.x.num(), 1}));
  if (!rem.is_zero()) throw VerificationError("section is not on the curve");
  const BiPoly xm(std::vector<UniPoly>{-P.x.num(), 1});
  const UniPoly& y = P.y.num();
  std::vector<BiPoly> by_a{
      q0 - BiPoly(UniPoly(2) * r0 * y) - r0 * r0 * xm,
      -BiPoly(UniPoly(2) * r1 * y) - UniPoly(2) * r0 * r1 * xm,
      -(r1 * r1 * xm),
  };
  MPoly out(3);
  for (unsigned k = 0; k < by_a.size(); ++k)
    for (std::size_t j = 0; j < by_a[k].coeffs().size(); ++j) {
      const auto cs = by_a[k].coeffs()[j].coeffs();
      for (std::size_t i = 0; i < cs.size(); ++i) out.add_term({k, static_cast<unsigned>(i), static_cast<unsigned>(j)}, cs[i]);
    }
  return out;
}

const std::vector<RatMatrix>& shear_sequence() {
  static const std::vector<RatMatrix> seq = [] {
    std::vector<RatMatrix> v{RatMatrix::identity(3)};
    std::mt19937 gen(20160);
    while (v.size() < 40) {
      RatMatrix m = RatMatrix::identity(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) += Rational(static_cast<long>(gen() % 7) - 3);
      if (!det(m).is_zero()) v.push_back(m);
    }
    return v;
  }();
  return seq;
}

namespace {

bool avoids_vertical_point(const MPoly& form) { return !form({0, 1, 0}).is_zero(); }

// True when every branch of the gcd over Q[t]/(m) is linear in x, i.e. over
// each root of m there is exactly one common point.
bool one_point_per_root(const UniPoly& m, const std::vector<BiPoly>& polys) {
  for (const auto& br : split_gcd(m, polys))
    if (br.gcd.is_zero() || br.gcd.deg() != 1) return false;
  return true;
}

}  // namespace

ContactCertificate contact_verify(const ConicCurve& c, const QuarticModel& q) {
  if (!is_smooth_conic(c.form)) throw InputError("conic is singular");
  for (const auto& sp : q.singular_points)
    if (!sp.point.empty() && c.form(sp.point).is_zero())
      throw VerificationError("conic passes through a singular point of the quartic");
  const auto& shears = shear_sequence();
  for (std::size_t k = 0; k < shears.size(); ++k) {
    MPoly cf = transform(c.form, shears[k]), ff = transform(q.F, shears[k]);
    if (!avoids_vertical_point(cf)) continue;
    BiPoly ca = dehomogenize(cf), fa = dehomogenize(ff);
    UniPoly res = resultant_x(ca, fa);
    if (res.is_zero()) throw VerificationError("conic is a component of the quartic");
    if (res.deg() != 8) continue;
    SquarefreePart sq = squarefree_decompose(res);
    UniPoly rad = sq.radical();
    if (!one_point_per_root(rad, {ca, fa})) continue;

    ContactCertificate cert;
    cert.resultant = res;
    cert.shear_index = k;
    cert.infinity_handled = k != 0;
    cert.multiplicities = sq.multiplicity_pattern();
    cert.tangency_count = static_cast<unsigned>(rad.deg());
    bool odd = false, high = false;
    for (unsigned m : cert.multiplicities) {
      odd = odd || m % 2 == 1;
      high = high || m > 2;
    }
    if (odd) {
      cert.diagnosis = "odd intersection multiplicity";
      return cert;
    }
    auto ps = perfect_square(res);
    cert.c = ps->first;
    cert.h = ps->second;
    if (high || cert.tangency_count != 4) {
      cert.diagnosis = "fewer than 4 distinct tangencies";
      return cert;
    }
    cert.valid = true;
    cert.diagnosis = "ok";
    return cert;
  }
  throw VerificationError("no admissible shear found for the contact check");
}

bool transversal(const ConicCurve& a, const ConicCurve& b) {
  if (proportional(a.form, b.form)) throw InputError("transversality of a conic with itself");
  for (const auto& m : shear_sequence()) {
    MPoly fa = transform(a.form, m), fb = transform(b.form, m);
    if (!avoids_vertical_point(fa) || !avoids_vertical_point(fb)) continue;
    BiPoly pa = dehomogenize(fa), pb = dehomogenize(fb);
    UniPoly res = resultant_x(pa, pb);
    if (res.is_zero()) throw VerificationError("conics share a component");
    if (res.deg() != 4) continue;
    UniPoly rad = squarefree_decompose(res).radical();
    if (!one_point_per_root(rad, {pa, pb})) continue;
    return rad.deg() == 4;
  }
  throw VerificationError("no admissible shear found for the transversality check");
}

bool have_common_point(const std::vector<MPoly>& forms) {
  if (forms.size() < 2) throw std::invalid_argument("need at least two curves");
  for (const auto& m : shear_sequence()) {
    std::vector<BiPoly> ps;
    bool ok = true;
    for (const auto& f : forms) {
      MPoly g = transform(f, m);
      ok = ok && avoids_vertical_point(g);
      ps.push_back(dehomogenize(g));
    }
    if (!ok) continue;
    const unsigned d0 = forms[0].degree();
    UniPoly g;
    for (std::size_t i = 1; i < ps.size() && ok; ++i) {
      UniPoly r = resultant_x(ps[0], ps[i]);
      if (r.is_zero()) throw VerificationError("curves share a component");
      // Full degree: every intersection is affine.
      ok = r.deg() == d0 * forms[i].degree();
      g = g.is_zero() ? r.monic() : gcd(g, r);
    }
    if (!ok) continue;
    if (g.deg() == 0) return false;
    for (const auto& br : split_gcd(squarefree_decompose(g).radical(), ps))
      if (br.gcd.is_zero() || br.gcd.deg() > 0) return true;
    return false;
  }
  throw VerificationError("no admissible shear found for the common-point check");
}

bool triple_free(const ConicCurve& a, const ConicCurve& b, const ConicCurve& c) {
  if (proportional(a.form, b.form) || proportional(a.form, c.form) || proportional(b.form, c.form))
    throw InputError("repeated conic in triple-point check");
  return !have_common_point({a.form, b.form, c.form});
}

namespace {

std::vector<std::array<std::size_t, 3>> triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

}  // namespace

bool no_triple_point_serial(const std::vector<ConicCurve>& conics) {
  for (const auto& [i, j, k] : triples(conics.size()))
    if (!triple_free(conics[i], conics[j], conics[k])) return false;
  return true;
}

bool no_triple_point(const std::vector<ConicCurve>& conics) {
  const auto ts = triples(conics.size());
  std::vector<char> ok(ts.size(), 1);
  std::vector<std::string> err(ts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t n = 0; n < ts.size(); ++n) {
    try {
      ok[n] = triple_free(conics[ts[n][0]], conics[ts[n][1]], conics[ts[n][2]]);
    } catch (const std::exception& e) {
      err[n] = e.what();
    }
  }
  for (std::size_t n = 0; n < ts.size(); ++n)
    if (!err[n].empty()) throw VerificationError(err[n]);
  for (char v : ok)
    if (!v) return false;
  return true;
}

FFPoint lift_section(const ConicCurve& c, const SurfaceModel& s) {
  if (!c.lift) throw UnsupportedError("conic " + c.name + " has no lift quadric");
  auto root = rational_sqrt(c.lift_scale);
  if (!root) throw UnsupportedError("lift of conic " + c.name + " is not defined over Q(t)");
  BiPoly g = c.affine();
  if (g.is_zero() || g.deg() != 2 || g.lc().deg() != 0) throw InputError("conic passes through z_o");
  const Rational inv = g.lc().coeff(0).inverse();
  BiPoly gm = UniPoly(inv) * g;
  BiPoly G = UniPoly(*root) * dehomogenize(*c.lift);
  if (!G.is_zero() && G.deg() > 2) throw InputError("lift quadric has x-degree > 2");
  G = G - G.coeff(2) * gm;
  RatFunc alpha(G.coeff(1)), beta(G.coeff(0));
  RatXPoly line = alpha * RatXPoly::x() + RatXPoly(beta);
  auto [quot, rem] = divrem(to_rat(s.quartic().affine()) - line * line, to_rat(gm));
  if (!rem.is_zero() || quot.is_zero() || quot.deg() != 1)
    throw VerificationError("lift quadric does not square to F on conic " + c.name);
  RatFunc xr = -quot.coeff(0) / quot.coeff(1);
  RatFunc yr = alpha * xr + beta;
  FFPoint p = FFPoint::affine(xr, -yr);
  if (!s.on_curve(p)) throw VerificationError("lifted section is off the curve");
  return p;
}

}  // namespace zf
