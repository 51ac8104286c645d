#include "support.hpp"

#include <sstream>

#include "zf/expr.hpp"

namespace zf::testing {

Rational laplace_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Rational term = m[0][j] * laplace_det(minor);
    total += j % 2 ? -term : term;
  }
  return total;
}

Rational laplace_resultant(const UniPoly& f, const UniPoly& g) {
  const std::size_t m = f.deg(), n = g.deg(), size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f.coeff(m - k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(n - k);
  return laplace_det(s);
}

UniPoly discriminant_from_roots(const UniPoly& r1, const UniPoly& r2, const UniPoly& r3) {
  UniPoly d = (r1 - r2) * (r1 - r3) * (r2 - r3);
  return d * d;
}

BiPoly lift_residue(const ConicCurve& c, const QuarticModel& q) {
  BiPoly g = c.affine();
  BiPoly G = dehomogenize(*c.lift);
  BiPoly r = q.affine() - UniPoly(c.lift_scale) * G * G;
  auto [quot, rem] = divrem(to_rat(r), to_rat(g));
  return rem.is_zero() ? BiPoly() : clear_denominators(rem);
}

UniPoly random_unipoly(std::mt19937& gen, std::size_t degree, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= degree; ++i) c.emplace_back(d(gen));
  if (c.back().is_zero()) c.back() = 1;
  return UniPoly(c);
}

BiPoly random_bipoly(std::mt19937& gen, std::size_t xdeg, std::size_t tdeg, int range) {
  std::vector<UniPoly> c;
  for (std::size_t i = 0; i <= xdeg; ++i) c.push_back(random_unipoly(gen, tdeg, range));
  return BiPoly(c);
}

RatMatrix random_invertible(std::mt19937& gen) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    RatMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = d(gen);
    if (!det(m).is_zero()) return m;
  }
}

Workspace two_nodal_lattice() {
  std::string text = builtin_scenario_text("two-nodal-shioda-usui");
  std::istringstream in(text);
  std::string keep;
  for (std::string line; std::getline(in, line);)
    if (line.rfind("family", 0) && line.rfind("conic", 0) && line.rfind("arrangement", 0) && line.rfind("check", 0))
      keep += line + "\n";
  return Workspace(parse_scenario(keep));
}

namespace {

MWVector random_vector(std::mt19937& gen, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  MWVector v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.passed) r.detail = what;
  r.passed = false;
}

}  // namespace

SuiteResult group_law_axioms(std::size_t trials, unsigned seed) {
  SuiteResult r{"group-law axioms"};
  Workspace w = two_nodal_lattice();
  const SurfaceModel& s = w.surface();
  const MWBasis& b = w.basis();
  std::mt19937 gen(seed);
  for (std::size_t k = 0; k < trials; ++k, ++r.trials) {
    FFPoint p = combine(random_vector(gen, 5, 1), b, s), q = combine(random_vector(gen, 5, 1), b, s),
            u = combine(random_vector(gen, 5, 1), b, s);
    if (!s.on_curve(p) || !s.on_curve(q)) fail(r, "point off the curve");
    if (!(s.add(p, q) == s.add(q, p))) fail(r, "addition not commutative");
    if (!(s.add(s.add(p, q), u) == s.add(p, s.add(q, u)))) fail(r, "addition not associative");
    if (!(s.add(p, FFPoint::origin()) == p)) fail(r, "O is not neutral");
    if (!s.add(p, s.neg(p)).is_origin()) fail(r, "P + (-P) != O");
  }
  return r;
}

SuiteResult height_bilinearity(std::size_t trials, unsigned seed) {
  SuiteResult r{"height bilinearity"};
  Workspace w = two_nodal_lattice();
  const SurfaceModel& s = w.surface();
  const MWBasis& b = w.basis();
  std::mt19937 gen(seed);
  auto gram_form = [&](const MWVector& u, const MWVector& v) {
    Rational acc(0);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) acc += Rational(u[i] * v[j]) * b.gram(i, j);
    return acc;
  };
  for (std::size_t k = 0; k < trials; ++k, ++r.trials) {
    MWVector u = random_vector(gen, 5, 1), v = random_vector(gen, 5, 1), x = random_vector(gen, 5, 1);
    FFPoint p = combine(u, b, s), q = combine(v, b, s), z = combine(x, b, s);
    if (s.pairing(p, q) != s.pairing(q, p)) fail(r, "pairing not symmetric");
    if (s.pairing(s.add(p, q), z) != s.pairing(p, z) + s.pairing(q, z)) fail(r, "pairing not additive");
    if (s.pairing(p, q) != gram_form(u, v)) fail(r, "pairing disagrees with the Gram form");
    if (s.height(p) != gram_form(u, u)) fail(r, "height disagrees with the Gram form");
  }
  return r;
}

SuiteResult resultant_multiplicativity(std::size_t trials, unsigned seed) {
  SuiteResult r{"resultant multiplicativity"};
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> deg(1, 3);
  for (std::size_t k = 0; k < trials; ++k, ++r.trials) {
    BiPoly f1 = random_bipoly(gen, static_cast<std::size_t>(deg(gen)), 2),
           f2 = random_bipoly(gen, static_cast<std::size_t>(deg(gen)), 2),
           g = random_bipoly(gen, static_cast<std::size_t>(deg(gen)), 2);
    if (resultant_x(f1 * f2, g) != resultant_x(f1, g) * resultant_x(f2, g)) fail(r, "Res(f1 f2, g) != Res(f1, g) Res(f2, g)");
    const Rational t0(static_cast<int>(k % 7) - 3);
    UniPoly a = eval_t(f1, t0), c = eval_t(g, t0);
    if (a.degree() == f1.degree() && c.degree() == g.degree() && resultant_x(f1, g)(t0) != laplace_resultant(a, c))
      fail(r, "Bareiss resultant disagrees with cofactor expansion");
  }
  return r;
}

SuiteResult perfect_square_round_trips(std::size_t trials, unsigned seed) {
  SuiteResult r{"perfect_square round trips"};
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> deg(0, 3), coef(1, 40), root(-9, 9);
  for (std::size_t k = 0; k < trials; ++k, ++r.trials) {
    UniPoly h = random_unipoly(gen, static_cast<std::size_t>(deg(gen)));
    const Rational c(coef(gen) * (k % 2 ? -1 : 1), coef(gen));
    const UniPoly p = c * h * h;
    auto sq = perfect_square(p);
    if (!sq || !(sq->first * sq->second * sq->second == p)) fail(r, "c h^2 not recognised: " + p.str());
    if (sq && !sq->second.is_zero() && !sq->second.lc().is_one()) fail(r, "square root not monic");
    UniPoly odd = p * UniPoly(std::vector<Rational>{Rational(root(gen)), Rational(1)});
    if (perfect_square(odd)) fail(r, "non-square accepted: " + odd.str());
  }
  return r;
}

SuiteResult mw_round_trips(std::size_t trials, unsigned seed) {
  SuiteResult r{"mw_coordinates round trips"};
  Workspace w = two_nodal_lattice();
  const SurfaceModel& s = w.surface();
  const MWBasis& b = w.basis();
  std::mt19937 gen(seed);
  for (std::size_t k = 0; k < trials; ++k, ++r.trials) {
    MWVector v = random_vector(gen, 5, 2);
    if (mw_coordinates(combine(v, b, s), b, s) != v) fail(r, "coordinates not recovered");
  }
  return r;
}

SuiteResult shear_invariance(std::size_t trials, unsigned seed) {
  SuiteResult r{"shear invariance of contact verdicts"};
  Workspace w(builtin_scenario("five-plet"));
  const QuarticModel& q = w.quartic();
  ConicCurve good = w.conic("C1");
  ConicCurve bad = good;
  bad.form.add_term({0, 0, 2}, Rational(-1));
  bad.lift.reset();
  const ContactCertificate good0 = contact_verify(good, q), bad0 = contact_verify(bad, q);
  if (!good0.valid || bad0.valid) fail(r, "reference verdicts wrong");
  std::mt19937 gen(seed);
  for (std::size_t k = 0; k < trials; ++k, ++r.trials) {
    const RatMatrix m = random_invertible(gen);
    QuarticModel qm;
    qm.F = transform(q.F, m);
    qm.singular_points = classify_singularities(qm.F);
    for (const ConicCurve* c : {&good, &bad}) {
      ConicCurve cm = *c;
      cm.form = transform(c->form, m);
      cm.lift.reset();
      const ContactCertificate a = contact_verify(cm, qm), ref = c == &good ? good0 : bad0;
      if (a.valid != ref.valid || a.multiplicities != ref.multiplicities) fail(r, "verdict changed under a shear");
    }
  }
  return r;
}

}  // namespace zf::testing
