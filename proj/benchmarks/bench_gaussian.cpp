#include <benchmark/benchmark.h>

#include "crbc/frontier.hpp"
#include "crbc/gaussian.hpp"

namespace g = crbc::gaussian;
namespace fr = crbc::frontier;

namespace {

const g::GaussianCrbcParams kParams{8, 100, 1, 2};

void WiretapSecrecy(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(g::wiretap_secrecy(8, 1, 2));
}
BENCHMARK(WiretapSecrecy);

void Prop1Point(benchmark::State& state) {
  for (auto _ : state) {
    const auto b = g::prop1_min_nc(0.37, kParams);
    benchmark::DoNotOptimize(g::prop1_rates(0.37, b.nc_min, kParams));
  }
}
BENCHMARK(Prop1Point);

void Prop4Point(benchmark::State& state) {
  for (auto _ : state) {
    const auto b = g::prop4_min_nc(0.37, 0.6, 0.25, kParams);
    benchmark::DoNotOptimize(g::prop4_rates(0.37, 0.6, 0.25, b.nc_min,
                                            kParams));
  }
}
BENCHMARK(Prop4Point);

void FrontierProp1(benchmark::State& state) {
  fr::SweepConfig cfg;
  cfg.scheme = fr::Scheme::prop1;
  cfg.alpha_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fr::trace_frontier(cfg, kParams));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(FrontierProp1)->Arg(101)->Arg(401)->Arg(1601)->Complexity();

void FrontierProp4(benchmark::State& state) {
  fr::SweepConfig cfg;
  cfg.scheme = fr::Scheme::prop4;
  cfg.alpha_points = 51;
  cfg.beta_points = 26;
  cfg.gamma_points = 41;
  for (auto _ : state)
    benchmark::DoNotOptimize(fr::trace_frontier(cfg, kParams));
}
BENCHMARK(FrontierProp4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
