#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zf/expr.hpp"
#include "zf/quotient_ring.hpp"
#include "zf/series.hpp"

using namespace zf;
using zf::testing::laplace_resultant;

namespace {
UniPoly P(const char* s) { return parse_unipoly(s); }
Rational Q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("rational arithmetic is exact and normalised") {
  CHECK(Q("6/4") == Q("3/2"));
  CHECK(Q("-3/6").str() == "-1/2");
  CHECK((Q("1/3") + Q("1/6")).str() == "1/2");
  CHECK(Q("7").is_integer());
  CHECK(rational_sqrt(Q("49/16")) == Q("7/4"));
  CHECK_FALSE(rational_sqrt(Q("2")));
  CHECK_FALSE(rational_sqrt(Q("-4")));
  CHECK(floor(Q("-7/2")) == Integer(-4));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("univariate division and gcd") {
  auto [q, r] = divrem(P("t^2 - 1"), P("t - 1"));
  CHECK(q == P("t + 1"));
  CHECK(r.is_zero());
  CHECK(gcd(P("t^2"), P("t^3")) == P("t^2"));
  CHECK(gcd(P("2*t + 4"), UniPoly()) == P("t + 2"));
  CHECK(gcd(P("t^2 - 1"), P("t^2 + 2*t + 1")) == P("t + 1"));
  CHECK_FALSE(UniPoly().degree());
  CHECK_THROWS(UniPoly().deg());
  CHECK_THROWS(divrem(P("t"), UniPoly()));

  std::mt19937 gen(11);
  for (int k = 0; k < 30; ++k) {
    UniPoly a = zf::testing::random_unipoly(gen, 4), b = zf::testing::random_unipoly(gen, 2);
    auto [qq, rr] = divrem(a, b);
    CHECK(qq * b + rr == a);
    CHECK((rr.is_zero() || rr.deg() < b.deg()));
    auto e = xgcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK(divrem(a, e.g).second.is_zero());
  }
}

TEST_CASE("squarefree decomposition and perfect squares") {
  UniPoly p = P("36*t^2*(t-2025)^2");
  auto sq = perfect_square(p);
  REQUIRE(sq);
  CHECK(sq->first == Rational(36));
  CHECK(sq->second == P("t*(t-2025)"));
  auto s2 = perfect_square(P("16*t^4"));
  REQUIRE(s2);
  CHECK(s2->first == Rational(16));
  CHECK(s2->second == P("t^2"));
  CHECK_FALSE(perfect_square(P("t^2 + 1")));
  CHECK_FALSE(perfect_square(P("t^3")));

  UniPoly f = P("3*(t-1)^3*(t+2)^2*(t^2+1)");
  SquarefreePart d = squarefree_decompose(f);
  CHECK(d.expand() == f);
  CHECK(d.radical() == P("(t-1)*(t+2)*(t^2+1)"));
  auto pattern = d.multiplicity_pattern();
  CHECK(pattern == std::vector<unsigned>{3, 2, 1, 1});
  CHECK(is_squarefree(P("t^3 - t")));
  CHECK_FALSE(is_squarefree(f));
  CHECK(rational_roots(P("2*t^3 - 3*t^2 - 3*t + 2")) == std::vector<Rational>{Q("-1"), Q("1/2"), Q("2")});
  CHECK(root_multiplicity(f, Q("1")) == 3);
}

TEST_CASE("resultants agree with the cofactor oracle") {
  CHECK(laplace_resultant(P("t^2 - 1"), P("t - 2")) == Rational(3));
  std::mt19937 gen(5);
  for (int k = 0; k < 20; ++k) {
    BiPoly f = zf::testing::random_bipoly(gen, 3, 2), g = zf::testing::random_bipoly(gen, 2, 2);
    UniPoly res = resultant_x(f, g);
    for (int t = -2; t <= 2; ++t) {
      UniPoly a = eval_t(f, Rational(t)), b = eval_t(g, Rational(t));
      if (a.degree() != f.degree() || b.degree() != g.degree()) continue;
      CHECK(res(Rational(t)) == laplace_resultant(a, b));
    }
  }
  // Res(prod (x - a_i), g) = prod g(a_i)
  BiPoly f = parse_bipoly("(x - t)*(x + 2)*(x - 3*t + 1)");
  BiPoly g = parse_bipoly("x^2 + t*x - 5");
  UniPoly expect = g(P("t")) * g(P("-2")) * g(P("3*t - 1"));
  CHECK(resultant_x(f, g) == expect);
}

TEST_CASE("rational functions") {
  RatFunc f(P("t^2 - 1"), P("2*t - 2"));
  CHECK(f.den() == UniPoly(1));
  CHECK(f == RatFunc(P("t + 1")) * RatFunc(Q("1/2")));
  CHECK(f.is_polynomial());
  RatFunc g(P("1"), P("t^2*(t - 3)"));
  CHECK(g.valuation_at(Q("0")) == -2);
  CHECK(g.valuation_at(Q("3")) == -1);
  CHECK(g.valuation_at(Q("1")) == 0);
  CHECK(g.degree() == -3);
  CHECK_THROWS(RatFunc(P("1"), UniPoly()));
}

TEST_CASE("quotient ring trace, inverse and split gcd") {
  QuotientRing r(P("t^2 - 2"));
  CHECK(r.trace(P("t")) == Rational(0));
  CHECK(r.trace(P("t^2")) == Rational(4));
  CHECK(r.trace(P("1")) == Rational(2));
  auto inv = r.inverse(P("t + 1"));
  REQUIRE(inv);
  CHECK(r.mul(*inv, P("t + 1")) == UniPoly(1));

  QuotientRing s(P("t*(t - 1)"));
  CHECK_FALSE(s.inverse(P("t")));

  // gcd(x - t, x^2 - t) over Q[t]/(t(t-1)): x at both t=0 and t=1 ... split via lc t
  auto branches = split_gcd(P("t*(t-1)"), {parse_bipoly("t*x^2 - x"), parse_bipoly("x - t")});
  UniPoly prod(1);
  for (const auto& b : branches) prod *= b.modulus;
  CHECK(prod == P("t*(t-1)"));
  for (const auto& b : branches) {
    if (b.modulus == P("t")) CHECK(b.gcd == parse_bipoly("x"));
    if (b.modulus == P("t - 1")) CHECK(b.gcd == parse_bipoly("x - 1"));
  }
}

TEST_CASE("truncated series") {
  Series a(std::vector<Rational>{1, 2, 3, 4, 5, 6});
  Series inv = a.inverse();
  Series one = a * inv;
  CHECK(one[0] == Rational(1));
  for (std::size_t k = 1; k < 6; ++k) CHECK(one[k].is_zero());
  Series b(std::vector<Rational>{1, Q("1/3"), 0, 7, 0, 0});
  Series r = b.sqrt1();
  Series sq = r * r;
  for (std::size_t k = 0; k < 6; ++k) CHECK(sq[k] == b[k]);
  // x^3 + (1 + tau) x^2 + tau x - tau^2 has the simple root -1 at tau = 0
  const std::size_t n = 8;
  Series a2(std::vector<Rational>{1, 1, 0, 0, 0, 0, 0, 0}), a4(std::vector<Rational>{0, 1, 0, 0, 0, 0, 0, 0}),
      a6(std::vector<Rational>{0, 0, -1, 0, 0, 0, 0, 0});
  Series x = hensel_root(a2, a4, a6, Rational(-1));
  Series val = x * x * x + a2 * x * x + a4 * x + a6;
  for (std::size_t k = 0; k < n; ++k) CHECK(val[k].is_zero());
}

TEST_CASE("multivariate forms and coordinate changes") {
  MPoly f = parse_form("X^3*Z + T^4 - 2*T*X*Z^2");
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 4);
  RatMatrix m{{1, 2, 0}, {0, 1, 3}, {1, 0, 1}};
  RatMatrix mi = *inverse(m);
  CHECK(transform(transform(f, m), mi) == f);
  RatVector v{Q("2"), Q("-1"), Q("1/3")};
  CHECK(transform(f, m)(v) == f(m * v));
  CHECK(homogenize(dehomogenize(f), 4) == f);
  CHECK(proportional(parse_form("2*T + 4*X"), parse_form("-T - 2*X")));
  CHECK_FALSE(proportional(parse_form("T + X"), parse_form("T - X")));
  CHECK(gradient_at(f, {0, 0, 1}) == RatVector{0, 0, 0});
}

TEST_CASE("expression parser") {
  CHECK(parse_unipoly("-1/12*t + 1") == UniPoly(std::vector<Rational>{1, Q("-1/12")}));
  CHECK(parse_unipoly("(t - 1)^2") == P("t^2 - 2*t + 1"));
  CHECK(parse_form("36*T^2*(T - 2025*Z)^2").degree() == 4);
  try {
    parse_unipoly("t + 0.5");
    FAIL("decimal accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 6);
    CHECK(std::string(e.what()).find("non-rational") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_unipoly("t + y"), ParseError);
  CHECK_THROWS_AS(parse_unipoly("t / t"), ParseError);
  CHECK_THROWS_AS(parse_unipoly("(t + 1"), ParseError);
  CHECK_THROWS_AS(parse_unipoly("t / 0"), ParseError);
}
