#include <benchmark/benchmark.h>

#include "ecloc/io.hpp"

using namespace ecloc;

namespace {

CurveFile fixture(const char* name) { return load_curve_file(std::string(ECLOC_DATA_DIR) + "/" + name); }

void BM_RingMul(benchmark::State& state) {
  auto r = RkContext::make(FqContext::make(3, 2), static_cast<int>(state.range(0)));
  RkElement a = RkElement::from_int(r, 2) + RkElement::eps_power(r, 1, 5);
  RkElement b = RkElement::one(r) + RkElement::eps_power(r, 2, 7);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_RingMul)->Arg(4)->Arg(16)->Arg(64);

void BM_RingInverse(benchmark::State& state) {
  auto r = RkContext::make(FqContext::make(5, 1), static_cast<int>(state.range(0)));
  RkElement a = RkElement::from_int(r, 3) + RkElement::eps_power(r, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_RingInverse)->Arg(4)->Arg(16)->Arg(64);

void BM_AddComplete(benchmark::State& state) {
  CurveFile f = fixture("dlp_comp_2.curve");
  LocalCurve c(f.coeffs);
  LocalPoint P = point_from_x(c, f.extras.at("Px")).triple();
  LocalPoint Q = point_from_x(c, f.extras.at("Qx")).triple();
  for (auto _ : state) benchmark::DoNotOptimize(add_complete(f.coeffs, P, Q));
}
BENCHMARK(BM_AddComplete);

void BM_InfMul(benchmark::State& state) {
  CurveFile f = fixture("strange_ex1.curve");
  LocalCurve c(f.coeffs);
  InfinityPoint P = point_from_x(c, RkElement::eps_power(f.ring(), 1));
  for (auto _ : state) benchmark::DoNotOptimize(inf_mul(static_cast<unsigned long long>(state.range(0)), P));
}
BENCHMARK(BM_InfMul)->Arg(9)->Arg(6561);

void BM_DlpSolve(benchmark::State& state) {
  CurveFile f = fixture("dlp_comp_2.curve");
  LocalCurve c(f.coeffs);
  InfinityPoint P = point_from_x(c, f.extras.at("Px")), Q = point_from_x(c, f.extras.at("Qx"));
  for (auto _ : state) benchmark::DoNotOptimize(dlp_solve(P, Q).n);
}
BENCHMARK(BM_DlpSolve);

void BM_PsiTable(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(psi_table(static_cast<int>(state.range(0)), Form::Short, {.validate = false, .use_cache = false}));
}
BENCHMARK(BM_PsiTable)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_GroupStructure(benchmark::State& state) {
  LocalCurve c(fixture("strange_ex1.curve").coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(group_structure(c).factors.size());
}
BENCHMARK(BM_GroupStructure)->Unit(benchmark::kMillisecond);

void BM_Scan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_exceptional_rate(static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_Scan)->Arg(5)->Arg(13)->Arg(79)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
