#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zf/expr.hpp"

using namespace zf;

namespace {

ConicCurve plain(const char* name, const char* form) {
  ConicCurve c;
  c.name = name;
  c.form = parse_form(form);
  return c;
}

MPoly family_display(const char* text) { return parse_poly(text, kFamilyNames); }

}  // namespace

TEST_CASE("C(r, P) reproduces the two displayed affine conics") {
  Workspace w(builtin_scenario("five-plet"));
  const MPoly c1 = homogenize(parse_bipoly("174531500609375/20736 - 164065639375/10368*t + 86856575/20736*t^2"
                                           " - 33930625/144*x + 5825/72*t*x - x^2"),
                              2);
  const MPoly c2 = homogenize(parse_bipoly("173813141567975/20736 - 163641780439/10368*t + 86747399/20736*t^2"
                                           " - 33930481/144*x + 5813/72*t*x - x^2"),
                              2);
  CHECK(proportional(w.conic("C1").form, c1));
  CHECK(proportional(w.conic("C2").form, c2));
  CHECK_FALSE(proportional(w.conic("C1").form, c2));
}

TEST_CASE("bisection families match the displayed quadratics") {
  struct Case {
    const char* scenario;
    const char* r0;
    MWVector word;
    const char* display;
  };
  const std::vector<Case> cases{
      {"two-nodal-shioda-usui", "-1/12*t", {2, 0, 0, 0, 0},
       "144*a^2*t^2 + 354528*a^2*t - 20736*x*a^2 + 109032*a*t^2 + 3456*x*t*a - 740703600*a^2 - 848072400*t*a"
       " - 86856575*t^2 - 1677600*t*x + 20736*x^2 + 719099745000*a + 328131278750*t + 4886010000*x"
       " - 174531500609375"},
      {"two-nodal-shioda-usui", "-1/6*t", {0, 1, 0, 1, 0},
       "4*a^2*t^2 + 31320*a^2*t - 144*a^2*x + 3732*a*t^2 + 48*a*t*x - 33169500*a^2 + 12555000*a*t + 683865*t^2"
       " + 17208*t*x + 144*x^2 - 13433647500*a + 1258071750*t + 5904900*x - 1360156809375"},
      {"tacnodal-shioda-usui", "-1/8*t", {2, 0, 0, 0},
       "a^2*t^2 - 1312*a^2*t - 64*a^2*x + 548*a*t^2 + 16*a*t*x + 20160*a^2 - 47232*a*t + 9540*t^2 + 288*t*x"
       " + 64*x^2 + 725760*a - 425088*t + 20736*x + 6531840"},
      {"tacnodal-shioda-usui", "-t", {0, 1, -1, 0},
       "a^2*t^2 + 192*a^2*t - a^2*x + 218*a*t^2 + 2*a*t*x + 8640*a^2 + 38592*a*t + 11865*t^2 + 217*t*x + x^2"
       " + 1607040*a + 1928448*t + 8649*x + 74727360"},
  };
  for (const auto& c : cases) {
    Workspace w(builtin_scenario(c.scenario));
    FFPoint p = combine(c.word, w.basis(), w.surface());
    MPoly fam = bisect_family(p, parse_unipoly(c.r0), UniPoly(1), w.surface());
    CHECK(proportional(fam, family_display(c.display)));
  }
}

TEST_CASE("the five-plet conics are contact conics with genuine lifts") {
  Workspace w(builtin_scenario("five-plet"));
  for (const auto& c : w.conics()) {
    ContactCertificate cert = contact_verify(c, w.quartic());
    CHECK_MESSAGE(cert.valid, c.name);
    CHECK(cert.tangency_count == 4);
    CHECK(cert.multiplicities == std::vector<unsigned>{2, 2, 2, 2});
    CHECK(is_smooth_conic(c.form));
    CHECK(zf::testing::lift_residue(c, w.quartic()).is_zero());
    MWVector neg = c.provenance->coords;
    for (auto& x : neg) x = -x;
    CHECK(mw_coordinates(lift_section(c, w.surface()), w.basis(), w.surface()) == neg);
  }
  const auto& cs = w.conics();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK(transversal(cs[i], cs[j]));
  CHECK(no_triple_point(cs));
}

TEST_CASE("a perturbed conic fails the contact check") {
  Workspace w(builtin_scenario("five-plet"));
  ConicCurve c = w.conic("C1");
  c.form.add_term({0, 0, 2}, Rational(-1));
  ContactCertificate cert = contact_verify(c, w.quartic());
  CHECK_FALSE(cert.valid);
  CHECK(cert.diagnosis == "odd intersection multiplicity");
}

TEST_CASE("contact check input errors") {
  Workspace w(builtin_scenario("five-plet"));
  CHECK_THROWS_AS(contact_verify(plain("L", "X^2 - T^2"), w.quartic()), InputError);
  CHECK_THROWS_AS(contact_verify(plain("N", "X^2 + T*X - T*Z"), w.quartic()), VerificationError);
}

TEST_CASE("transversality and triple points") {
  ConicCurve a = plain("A", "X^2 - T*Z"), b = plain("B", "X*Z - T^2"), c = plain("C", "X^2 + X*Z - 2*T^2");
  CHECK_FALSE(triple_free(a, b, c));
  CHECK_FALSE(no_triple_point({a, b, c}));
  CHECK_FALSE(no_triple_point_serial({a, b, c}));
  CHECK(have_common_point({a.form, b.form}));
  CHECK_FALSE(transversal(plain("D", "X^2 - T*Z"), plain("E", "X^2 - T*Z + T^2")));
  CHECK(transversal(plain("F", "X^2 + T^2 - Z^2"), plain("G", "X^2 + 4*T^2 - 2*Z^2")));
}

TEST_CASE("shear sequence is deterministic and invertible") {
  const auto& s = shear_sequence();
  REQUIRE(s.size() == 40);
  CHECK(s[0] == RatMatrix::identity(3));
  for (const auto& m : s) CHECK_FALSE(det(m).is_zero());
  CHECK(&shear_sequence() == &s);
}

TEST_CASE("property: contact verdicts are invariant under shears") {
  auto r = zf::testing::shear_invariance(4, 9);
  CHECK_MESSAGE(r.passed, r.detail);
}
