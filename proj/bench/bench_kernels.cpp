#include <benchmark/benchmark.h>

#include "ultra/forge.hpp"
#include "ultra/gauss.hpp"
#include "ultra/ratfun.hpp"

namespace {

using namespace ultra;

const FieldDescriptor kField = FieldDescriptor::genlaurent(3);

std::vector<GaussPoint> grid_points(long count) {
  std::vector<GaussPoint> pts;
  for (long i = 0; i < count; ++i) pts.emplace_back(LogValue(make_rational(i, count)) + LogValue(1), std::nullopt);
  return pts;
}

void BM_EvaluateGrid(benchmark::State& state, Execution exec) {
  auto f = RatFun::parse(kField, "(t - z)^6 * (t - z^(1/3))^4 / (t^3 - z^2)^2");
  auto pts = grid_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid(f, pts, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyCertificate(benchmark::State& state, Execution exec) {
  auto sch = make_schedule(kField, RadiusInterval(LogValue(1), LogValue(2)), LogValue(make_rational(1, 4)),
                           ForgeMode::Theorem, state.range(0));
  auto centers = choose_centers(sch);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(sch, centers, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_EvaluateGrid, serial, Execution::Serial)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(BM_EvaluateGrid, parallel, Execution::Parallel)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(BM_VerifyCertificate, serial, Execution::Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyCertificate, parallel, Execution::Parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
