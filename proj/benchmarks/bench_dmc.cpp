#include <benchmark/benchmark.h>

#include "crbc/dmc.hpp"
#include "crbc/random.hpp"

namespace d = crbc::dmc;
namespace r = crbc::random;

namespace {

void Theorem1Binary(benchmark::State& state) {
  r::Rng rng(42);
  const auto ch = r::channel(rng, 2, 2, 2, 2);
  const auto in = r::theorem1_input(rng, ch, 2, 2, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(d::eval_theorem1(ch, in));
}
BENCHMARK(Theorem1Binary);

void Theorem5Binary(benchmark::State& state) {
  r::Rng rng(43);
  auto ch = d::DmcSpec::two_sided_channel(2, 2, 2, 2, 2);
  ch.p = r::conditional(rng, 8, 4);
  const auto in = r::theorem5_input(rng, ch, 2, 2, 2, 2, 2, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(d::eval_theorem5(ch, in));
}
BENCHMARK(Theorem5Binary);

void MaximizeTheorem3(benchmark::State& state) {
  r::Rng rng(44);
  const auto ch = r::channel(rng, 2, 2, 2, 2);
  const auto res = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(d::maximize_theorem3(ch, res));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(MaximizeTheorem3)->Arg(16)->Arg(32)->Arg(64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
