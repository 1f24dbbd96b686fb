#include <benchmark/benchmark.h>

#include "dispnet/discrepancy.hpp"
#include "dispnet/empty_box.hpp"
#include "dispnet/net_construction.hpp"
#include "dispnet/proof_enumeration.hpp"

namespace {

using namespace dispnet;

Exec exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Exec::serial : Exec::parallel; }

void args(benchmark::internal::Benchmark* b, std::initializer_list<std::int64_t> ms) {
  b->ArgNames({"m", "parallel"});
  for (auto m : ms)
    for (std::int64_t p : {0, 1}) b->Args({m, p});
  b->Unit(benchmark::kMillisecond);
}

void BM_GenerateNet(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const NetSpec spec{GFMatrix::reversal(2, m), GFMatrix::upper_ones(2, m)};
  for (auto _ : state) benchmark::DoNotOptimize(generate_net(spec, exec_of(state)));
}
BENCHMARK(BM_GenerateNet)->Apply([](auto* b) { args(b, {12, 16}); });

void BM_LargestEmptyBox(benchmark::State& state) {
  const auto net = hammersley(2, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(largest_empty_box(net, exec_of(state)));
}
BENCHMARK(BM_LargestEmptyBox)->Apply([](auto* b) { args(b, {10, 12}); });

void BM_StarDiscrepancy(benchmark::State& state) {
  const auto net = named_net(NamedNet::pu, 2, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(star_discrepancy(net));
}
BENCHMARK(BM_StarDiscrepancy)->ArgName("m")->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_L2Warnock(benchmark::State& state) {
  const auto net = named_net(NamedNet::pu, 2, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l2_star_discrepancy_squared(net, exec_of(state)));
}
BENCHMARK(BM_L2Warnock)->Apply([](auto* b) { args(b, {10, 12}); });

void BM_ExtremeDiscrepancy(benchmark::State& state) {
  const auto net = hammersley(2, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_discrepancy(net, exec_of(state)));
}
BENCHMARK(BM_ExtremeDiscrepancy)->Apply([](auto* b) { args(b, {7, 9}); });

void BM_EnumerateNut(benchmark::State& state) {
  const Exec exec = state.range(0) == 0 ? Exec::serial : Exec::parallel;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_theorem3(exec));
  state.SetLabel(exec == Exec::serial ? "serial" : "parallel");
}
BENCHMARK(BM_EnumerateNut)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
