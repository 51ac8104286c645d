#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace zf;

namespace {
SplittingType st(unsigned a) { return {a, 4 - a}; }
}  // namespace

TEST_CASE("splitting types of the five-plet conics") {
  Workspace w(builtin_scenario("five-plet"));
  const QuarticModel& q = w.quartic();
  auto c = [&](const char* n) -> const ConicCurve& { return w.conic(n); };
  CHECK(splitting_type(c("C3"), c("C4"), q) == st(0));
  CHECK(splitting_type(c("C3"), c("C5"), q) == st(1));
  CHECK(splitting_type(c("C3"), c("C6"), q) == st(2));
  CHECK(splitting_type(c("C1"), c("C2"), q) == st(0));
  CHECK(splitting_type(c("C1"), c("C3"), q) == st(2));
  CHECK(splitting_type(c("C4"), c("C3"), q) == st(0));
  CHECK(splitting_type(c("C6"), c("C3"), q) == st(2));
}

TEST_CASE("phi1 and the distinguishing verdict") {
  Workspace w(builtin_scenario("five-plet"));
  auto arrs = w.arrangements();
  InvariantReport rep = distinguish(arrs, w.surface(), w.basis());
  REQUIRE(rep.rows.size() == 5);
  std::vector<unsigned> counts;
  for (const auto& r : rep.rows) counts.push_back(r.phi1.count_ones);
  CHECK(counts == std::vector<unsigned>{2, 1, 0, 0, 0});
  CHECK(rep.rows[0].splitting_multiset() == std::vector<SplittingType>{st(0)});
  CHECK(rep.rows[1].splitting_multiset() == std::vector<SplittingType>{st(2)});
  CHECK(rep.rows[2].splitting_multiset() == std::vector<SplittingType>{st(0)});
  CHECK(rep.rows[3].splitting_multiset() == std::vector<SplittingType>{st(1)});
  CHECK(rep.rows[4].splitting_multiset() == std::vector<SplittingType>{st(2)});
  CHECK(rep.comparable);
  CHECK(rep.distinguished);
  REQUIRE(rep.witnesses.size() == 10);
  for (const auto& [ij, wit] : rep.witnesses) CHECK(wit != "none");
  CHECK(rep.witnesses[0].second == "phi1+splitting");
  CHECK(rep.witnesses[1].second == "phi1");
}

TEST_CASE("identical arrangements are not distinguished") {
  Workspace w(builtin_scenario("five-plet"));
  auto arrs = w.arrangements();
  InvariantReport rep = distinguish({arrs[2], arrs[2]}, w.surface(), w.basis());
  CHECK_FALSE(rep.distinguished);
  CHECK(rep.witnesses.front().second == "none");
}

TEST_CASE("fingerprints and sub-arrangements") {
  Workspace w(builtin_scenario("five-plet"));
  Arrangement all{"all", w.conics()};
  Fingerprint fp = fingerprint(all, w.quartic());
  CHECK(fp.conic_count == 6);
  CHECK(fp.pair_transversal.size() == 15);
  CHECK(fp.no_triple);
  CHECK(sub_arrangements(all, 2).size() == 15);
  CHECK(sub_arrangements(all, 3).size() == 20);
  CHECK_THROWS_AS(sub_arrangements(all, 7), InputError);
}

TEST_CASE("the tacnodal pair is separated by phi1") {
  Workspace w(builtin_scenario("tacnodal-shioda-usui"));
  InvariantReport rep = distinguish(w.arrangements(), w.surface(), w.basis());
  CHECK(rep.rows[0].phi1.bits == std::vector<int>{1});
  CHECK(rep.rows[1].phi1.bits == std::vector<int>{0});
  CHECK(rep.distinguished);
}

TEST_CASE("club points and base-point invariance") {
  MPoly g = builtin_quartic("two-nodal-shioda-usui");
  auto pts = scan_club_points(g, 2000, 2);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == RatVector{0, -271350, 1});
  CHECK(pts[1] == RatVector{1413, -96084, 1});

  Workspace w(builtin_scenario("five-plet"));
  InvarianceReport rep = base_point_invariance(w.conic("C1"), g, {0, 1, 0}, pts[0], w.lines());
  CHECK(rep.agree);
  CHECK(rep.v1 == MWVector{-2, 0, 0, 0, 0});
  CHECK(rep.gram1 == rep.gram2);
  CHECK(rep.club2.satisfied);
}
