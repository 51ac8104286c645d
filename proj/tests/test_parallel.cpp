#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace zf;

TEST_CASE("parallel and serial triple-point sweeps agree") {
  std::mt19937 gen(23);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int k = 0; k < 8; ++k) {
    std::vector<ConicCurve> cs;
    for (int i = 0; i < 5; ++i) {
      ConicCurve cc;
      cc.name = "R" + std::to_string(i);
      for (const Exponent& e : std::vector<Exponent>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}})
        cc.form.add_term(e, Rational(c(gen)));
      if (cc.form.is_zero()) cc.form.add_term({0, 0, 2}, Rational(1));
      cs.push_back(cc);
    }
    // force a shared point [0:0:1] in half of the trials
    if (k % 2)
      for (std::size_t i = 0; i < 3; ++i) cs[i].form.add_term({0, 0, 2}, -cs[i].form.coeff({0, 0, 2}));
    CHECK(no_triple_point(cs) == no_triple_point_serial(cs));
  }
  Workspace w(builtin_scenario("five-plet"));
  CHECK(no_triple_point(w.conics()) == no_triple_point_serial(w.conics()));
}

TEST_CASE("parallel and serial distinguish agree") {
  Workspace w(builtin_scenario("five-plet"));
  auto arrs = w.arrangements();
  InvariantReport a = distinguish(arrs, w.surface(), w.basis(), true);
  InvariantReport b = distinguish(arrs, w.surface(), w.basis(), false);
  CHECK(a.distinguished == b.distinguished);
  CHECK(a.witnesses == b.witnesses);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].phi1.bits == b.rows[i].phi1.bits);
    CHECK(a.rows[i].splitting == b.rows[i].splitting);
  }
}

TEST_CASE("sweep output does not depend on the number of jobs") {
  auto run = [](int jobs) {
    Workspace w(builtin_scenario("tacnodal-shioda-usui"));
    RunOptions opt;
    opt.jobs = jobs;
    opt.param_grid = "a=-2:2";
    return run_check(w, "sweep", opt).data.dump();
  };
  CHECK(run(1) == run(4));
}
