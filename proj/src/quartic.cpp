#include "zf/quartic.hpp"

#include <algorithm>

#include "zf/errors.hpp"
#include "zf/quotient_ring.hpp"

namespace zf {

std::string to_string(SingularityKind k) {
  switch (k) {
    case SingularityKind::node: return "node";
    case SingularityKind::tacnode: return "tacnode";
    case SingularityKind::nonrational: return "unclassified, non-rational";
  }
  return "?";
}

RatVector normalize_point(RatVector p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    const Rational inv = p[i].inverse();
    for (auto& c : p) c *= inv;
    return p;
  }
  throw InputError("the zero vector is not a projective point");
}

namespace {

RatVector unit(std::size_t i) {
  RatVector e(3);
  e[i] = 1;
  return e;
}

RatMatrix from_columns(const RatVector& a, const RatVector& b, const RatVector& c) {
  RatMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, 0) = a[i];
    m(i, 1) = b[i];
    m(i, 2) = c[i];
  }
  return m;
}

RatVector primitive_vector(RatVector v) {
  Integer l = 1, g = 0;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  for (auto& c : v) {
    c *= Rational(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
  }
  if (g != 0)
    for (auto& c : v) c /= Rational(g);
  return v;
}

bool independent(const RatVector& a, const RatVector& b) {
  RatVector c = cross(a, b);
  return !(c[0].is_zero() && c[1].is_zero() && c[2].is_zero());
}

Rational affine_coeff(const MPoly& h, unsigned i, unsigned j) {
  const unsigned d = h.degree();
  if (i + j > d) return 0;
  return h.coeff({i, j, d - i - j});
}

SingularityKind local_type(const MPoly& F, const RatVector& p) {
  std::size_t k = 2;
  while (p[k].is_zero()) --k;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != k) rest.push_back(i);
  MPoly h = transform(F, from_columns(unit(rest[0]), unit(rest[1]), p));
  Rational a = affine_coeff(h, 2, 0), b = affine_coeff(h, 1, 1), c = affine_coeff(h, 0, 2);
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw UnsupportedError("singular point of multiplicity >= 3");
  if (!(b * b - Rational(4) * a * c).is_zero()) return SingularityKind::node;
  if (!a.is_zero()) {
    // Put the double tangent on v = 0.
    RatMatrix n{{-b / (Rational(2) * a), 1, 0}, {1, 0, 0}, {0, 0, 1}};
    h = transform(h, n);
    c = a;
  }
  // Strict transform of the blowup v = u w, at the tangent direction.
  if (!affine_coeff(h, 3, 0).is_zero()) throw UnsupportedError("cusp singularity is not supported");
  Rational h40 = affine_coeff(h, 4, 0), h21 = affine_coeff(h, 2, 1);
  if ((h21 * h21 - Rational(4) * h40 * c).is_zero())
    throw UnsupportedError("double point worse than a tacnode is not supported");
  return SingularityKind::tacnode;
}

UniPoly binary_at_infinity(const MPoly& g) {
  // g(1, X, 0) as a polynomial in X.
  std::vector<Rational> c;
  for (const auto& [e, v] : g.terms()) {
    if (e[2] != 0) continue;
    if (c.size() <= e[1]) c.resize(e[1] + 1);
    c[e[1]] += v;
  }
  return UniPoly(std::move(c));
}

void add_unique(std::vector<SingularPoint>& out, SingularPoint sp) {
  for (const auto& o : out)
    if (o.kind == SingularityKind::nonrational && sp.kind == SingularityKind::nonrational) return;
  out.push_back(std::move(sp));
}

std::size_t distinct_root_count(const UniPoly& p) { return squarefree_decompose(p).radical().deg(); }

}  // namespace

std::vector<SingularPoint> classify_singularities(const MPoly& F) {
  if (F.nvars() != 3 || !F.is_homogeneous() || F.is_zero()) throw InputError("expected a nonzero ternary form");
  std::vector<SingularPoint> out;
  std::vector<RatVector> rational;

  // Affine chart Z = 1, sheared x -> x + k t if needed.
  for (long k = 0;; ++k) {
    if (k > 8) throw UnsupportedError("singular locus is not zero-dimensional");
    RatMatrix sh = RatMatrix::identity(3);
    sh(1, 0) = k;
    MPoly G = transform(F, sh);
    BiPoly f = dehomogenize(G), ft = dehomogenize(G.derivative(0)), fx = dehomogenize(G.derivative(1));
    if (f.is_zero() || fx.is_zero() || ft.is_zero()) continue;
    UniPoly r1 = resultant_x(f, fx), r2 = resultant_x(fx, ft);
    if (r1.is_zero() || r2.is_zero()) continue;
    UniPoly g = gcd(r1, r2);
    if (g.deg() == 0) break;
    UniPoly rad = squarefree_decompose(g).radical();
    UniPoly irr = rad;
    for (const Rational& t0 : rational_roots(rad)) {
      irr = exact_div(irr, UniPoly(std::vector<Rational>{-t0, 1}));
      UniPoly u = gcd(gcd(eval_t(f, t0), eval_t(fx, t0)), eval_t(ft, t0));
      if (u.is_zero()) throw UnsupportedError("quartic contains a singular line");
      auto xs = rational_roots(u);
      for (const Rational& x0 : xs) {
        // Undo the shear: source X = X' + k T.
        rational.push_back({t0, x0 + Rational(k) * t0, 1});
      }
      if (distinct_root_count(u) > xs.size()) add_unique(out, {{}, SingularityKind::nonrational});
    }
    if (irr.deg() > 0)
      for (const auto& br : split_gcd(irr, {f, fx, ft})) {
        if (br.gcd.is_zero()) throw UnsupportedError("singular locus is not zero-dimensional");
        if (br.gcd.deg() > 0) add_unique(out, {{}, SingularityKind::nonrational});
      }
    break;
  }

  // Line Z = 0.
  if (gradient_at(F, {0, 1, 0}) == RatVector{0, 0, 0} && F({0, 1, 0}).is_zero()) rational.push_back({0, 1, 0});
  UniPoly u = binary_at_infinity(F);
  for (std::size_t i = 0; i < 3; ++i) {
    UniPoly d = binary_at_infinity(F.derivative(i));
    if (!d.is_zero()) u = u.is_zero() ? d : gcd(u, d);
  }
  if (!u.is_zero() && u.deg() > 0) {
    auto xs = rational_roots(u);
    for (const Rational& x0 : xs) rational.push_back({1, x0, 0});
    if (distinct_root_count(u) > xs.size()) add_unique(out, {{}, SingularityKind::nonrational});
  } else if (u.is_zero()) {
    throw UnsupportedError("quartic is singular along Z = 0");
  }

  for (auto& p : rational) {
    p = normalize_point(p);
    out.push_back({p, local_type(F, p)});
  }
  std::stable_sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
    return a.point.size() > b.point.size() || (a.point.size() == b.point.size() && a.point < b.point);
  });
  return out;
}

QuarticModel normalize_quartic(const MPoly& G, const RatVector& z, bool classify) {
  if (G.nvars() != 3 || G.is_zero() || !G.is_homogeneous() || G.degree() != 4)
    throw InputError("expected a homogeneous quartic in T, X, Z");
  if (z.size() != 3) throw InputError("expected a point [T:X:Z]");
  RatVector zp = primitive_vector(normalize_point(z));
  if (!G(zp).is_zero()) throw InputError("distinguished point is not on the quartic");
  const RatVector n = gradient_at(G, zp);
  if (n == RatVector{0, 0, 0}) throw InputError("distinguished point is singular on the quartic");

  RatVector p1;
  for (std::size_t i = 0; i < 3 && p1.empty(); ++i)
    if (dot(n, unit(i)).is_zero() && independent(unit(i), zp)) p1 = unit(i);
  for (std::size_t i = 0; i < 3 && p1.empty(); ++i) {
    RatVector c = primitive_vector(cross(n, unit(i)));
    if (independent(c, zp)) p1 = c;
  }
  RatVector p3;
  for (std::size_t i = 0; i < 3 && p3.empty(); ++i)
    if (!dot(n, unit(i)).is_zero()) p3 = unit(i);
  const Rational c = dot(n, p3);
  for (auto& v : p3) v /= c;

  QuarticModel q;
  q.source = G;
  q.base_point = zp;
  q.transform = from_columns(p1, zp, p3);
  q.F = transform(G, q.transform);
  if (!q.F.coeff({0, 3, 1}).is_one()) throw VerificationError("X^3 Z coefficient is not 1 after normalization");
  BiPoly f = q.affine();
  if (f.deg() != 3 || !(f.lc() == UniPoly(1))) throw VerificationError("normalized quartic is not monic cubic in x");
  q.b2 = f.coeff(2);
  q.b3 = f.coeff(1);
  q.b4 = f.coeff(0);
  if (classify) q.singular_points = classify_singularities(q.F);
  return q;
}

ClubReport club_check(const QuarticModel& q) {
  ClubReport r;
  r.tangent_line = MPoly::var(2, 3);
  std::vector<Rational> c;
  for (const auto& [e, v] : q.F.terms()) {
    if (e[2] != 0) continue;
    if (c.size() <= e[0]) c.resize(e[0] + 1);
    c[e[0]] += v;
  }
  UniPoly p(std::move(c));  // F(T, 1, 0)
  if (p.is_zero()) return r;
  if (p.deg() > 0) r.pattern = squarefree_decompose(p).multiplicity_pattern();
  if (p.deg() < 4) r.pattern.push_back(static_cast<unsigned>(4 - p.deg()));
  std::sort(r.pattern.rbegin(), r.pattern.rend());
  r.satisfied = r.pattern == std::vector<unsigned>{2, 1, 1} || r.pattern == std::vector<unsigned>{3, 1};
  return r;
}

}  // namespace zf
