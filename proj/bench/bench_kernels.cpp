// Serial reference kernels against their OpenMP variants.

#include <benchmark/benchmark.h>

#include <numeric>

#include "cpc/corpus.hpp"
#include "cpc/kernels.hpp"

namespace {

using cpc::Exec;

cpc::GroupPtr group(const char* name) { return cpc::corpus_entry(name).build(); }

std::vector<cpc::ElementId> all_ids(const cpc::GroupTable& g) {
  std::vector<cpc::ElementId> out(g.order());
  std::iota(out.begin(), out.end(), cpc::ElementId{0});
  return out;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_CoprimeCommutatorSet(benchmark::State& state) {
  const auto gp = group("PSL(2,13)");
  const auto& g = *gp;
  const auto ids = all_ids(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpc::coprime_commutator_set(g, ids, ids, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ids.size() * ids.size()));
}

void BM_FirstOrderViolation(benchmark::State& state) {
  const auto gp = group("S6");
  const auto& g = *gp;
  const auto whole = cpc::ElementSet::whole(g);
  for (auto _ : state) benchmark::DoNotOptimize(cpc::first_order_violation(whole, exec_of(state)));
}

void BM_FirstOrderViolationNone(benchmark::State& state) {
  const auto gp = group("D8");
  const auto& g = *gp;
  const auto whole = cpc::ElementSet::whole(g);
  for (auto _ : state) benchmark::DoNotOptimize(cpc::first_order_violation(whole, exec_of(state)));
}

void BM_CayleyTable(benchmark::State& state) {
  const auto gp = group("PSL(2,13)");
  const auto& g = *gp;
  std::vector<cpc::Permutation> elements;
  std::unordered_map<cpc::Permutation, cpc::ElementId, cpc::PermutationHash> index;
  for (cpc::ElementId i = 0; i < g.order(); ++i) {
    elements.push_back(g.element(i));
    index.emplace(g.element(i), i);
  }
  for (auto _ : state) benchmark::DoNotOptimize(cpc::build_cayley_table(elements, index, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_CoprimeCommutatorSet)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstOrderViolation)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FirstOrderViolationNone)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CayleyTable)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
