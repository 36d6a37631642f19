#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "fcover/pipeline.hpp"

namespace {

using namespace fcover;

void BM_CloseI(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(testing::symmetric_inverse_monoid(n).size());
  }
}
BENCHMARK(BM_CloseI)->Arg(2)->Arg(3)->Arg(4);

void BM_PProductI3(benchmark::State& state) {
  const auto m = testing::symmetric_inverse_monoid(3);
  const auto g = build_compatible_group(m);
  for (auto _ : state) benchmark::DoNotOptimize(p_product(m, g).size());
}
BENCHMARK(BM_PProductI3);

void BM_TwoAcyclicI2(benchmark::State& state) {
  const auto m = testing::i2_te();
  const auto f = build_f_inverse_cover(m, SearchBudget{});
  const auto& r = std::get<CoverResult>(f);
  for (auto _ : state) benchmark::DoNotOptimize(is_2_acyclic(*r.h));
}
BENCHMARK(BM_TwoAcyclicI2);

void BM_FInverseCorpus(benchmark::State& state) {
  const auto corpus = testing::closure_corpus(2);
  for (auto _ : state) {
    std::size_t found = 0;
    for (const auto& e : corpus) {
      found += std::holds_alternative<CoverResult>(
          build_f_inverse_cover(e.monoid, SearchBudget{}));
    }
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_FInverseCorpus)->Unit(benchmark::kMillisecond);

void BM_EUnitaryCorpus(benchmark::State& state) {
  const auto corpus = testing::full_corpus();
  for (auto _ : state) {
    for (const auto& e : corpus) {
      benchmark::DoNotOptimize(build_e_unitary_cover(e.monoid).sizes.n);
    }
  }
}
BENCHMARK(BM_EUnitaryCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
