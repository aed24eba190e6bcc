#include <benchmark/benchmark.h>

#include "chsym/appendix.hpp"
#include "chsym/group.hpp"
#include "chsym/induction.hpp"
#include "chsym/lr.hpp"
#include "chsym/pairing.hpp"

namespace {

using namespace chsym;

// Coefficients are memoized, so steady-state iterations measure the
// table lookup; the first iteration pays for the tableau enumeration.
void BM_LrCoefficient(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Partition la, mu;
  for (int i = n; i >= 1; --i) la.push_back(i);
  mu = la;
  Partition nu;
  for (int i = 0; i < static_cast<int>(la.size()); ++i)
    nu.push_back(2 * la[static_cast<size_t>(i)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lr_coefficient(la, mu, nu));
  }
}
BENCHMARK(BM_LrCoefficient)->Arg(2)->Arg(3)->Arg(4);

void BM_EnumerateJset(benchmark::State& state) {
  int t = static_cast<int>(state.range(0));
  AppendixTable table = appendix_symbols(AppendixCase::C1_b0, t);
  SymbolPair pair =
      make_pair(table.rows[0].first, table.rows[0].second, GroupType::C);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_jset(pair).members.size());
  }
}
BENCHMARK(BM_EnumerateJset)->Arg(1)->Arg(2)->Arg(3);

void BM_InduceProductB(benchmark::State& state) {
  Symbol A = bipartition_to_symbol({2, 1}, {1});
  Symbol B = bipartition_to_symbol({1, 1}, {2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(induce_product_b(A, B).terms().size());
  }
}
BENCHMARK(BM_InduceProductB);

void BM_BuildGroup(benchmark::State& state) {
  // measures the class-partition sweep; the cache is keyed per (n, kind)
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const GroupData& g = GroupData::get(n, GroupKind::B);
    benchmark::DoNotOptimize(g.num_classes());
  }
}
BENCHMARK(BM_BuildGroup)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
