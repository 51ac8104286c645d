#include <benchmark/benchmark.h>

#include "zf/report.hpp"

using namespace zf;

namespace {

// Six five-plet conics plus members of both two-nodal families.
const std::vector<ConicCurve>& conic_pool() {
  static const std::vector<ConicCurve> pool = [] {
    Workspace w(builtin_scenario("five-plet"));
    std::vector<ConicCurve> out = w.conics();
    Workspace fam(builtin_scenario("two-nodal-shioda-usui"));
    for (const auto& f : fam.scenario().families)
      for (int a = 2; a <= 4; ++a) out.push_back(fam.family_member(f, a));
    return out;
  }();
  return pool;
}

void BM_NoTriplePoint(benchmark::State& state) {
  const auto& cs = conic_pool();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(parallel ? no_triple_point(cs) : no_triple_point_serial(cs));
  state.SetLabel(std::to_string(cs.size()) + " conics");
}
BENCHMARK(BM_NoTriplePoint)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

void BM_Distinguish(benchmark::State& state) {
  Workspace w(builtin_scenario("five-plet"));
  const auto arrs = w.arrangements();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(distinguish(arrs, w.surface(), w.basis(), parallel).distinguished);
}
BENCHMARK(BM_Distinguish)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  Workspace w(builtin_scenario("tacnodal-shioda-usui"));
  RunOptions opt;
  opt.jobs = static_cast<int>(state.range(0));
  opt.param_grid = "a=-3:3";
  for (auto _ : state) benchmark::DoNotOptimize(run_check(w, "sweep", opt).exit_code);
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->ArgName("jobs")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
