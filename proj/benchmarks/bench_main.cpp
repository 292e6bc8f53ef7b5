#include <benchmark/benchmark.h>

#include "pasep/ansatz.hpp"
#include "pasep/chain.hpp"
#include "pasep/perms.hpp"
#include "pasep/tableaux.hpp"

namespace {

void BM_TableauEnumerationByExpanse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pasep::genfun_expanse(n));
}
BENCHMARK(BM_TableauEnumerationByExpanse)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_AnsatzSweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto configs = pasep::all_configurations(n);
  for (auto _ : state) {
    for (const auto& tau : configs) benchmark::DoNotOptimize(pasep::ansatz_eval(pasep::AnsatzKind::Tableau, tau));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * configs.size()));
}
BENCHMARK(BM_AnsatzSweep)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_PartitionFunction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pasep::partition_function(pasep::AnsatzKind::Tableau, n));
}
BENCHMARK(BM_PartitionFunction)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_CrossingsOverSymmetricGroup(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pasep::crossings_distribution(m));
}
BENCHMARK(BM_CrossingsOverSymmetricGroup)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

void BM_ExactSteadyState(benchmark::State& state) {
  const pasep::ChainParams params{static_cast<std::size_t>(state.range(0)), pasep::Rational(1, 2),
                                  pasep::Rational(2, 3), pasep::Rational(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(pasep::steady_state_exact(params));
}
BENCHMARK(BM_ExactSteadyState)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_Simulation(benchmark::State& state) {
  const pasep::ChainParams params{8, pasep::Rational(1, 2), 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(pasep::simulate(params, 100000, 0, 7));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_Simulation)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
