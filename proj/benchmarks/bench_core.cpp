#include <benchmark/benchmark.h>

#include <random>

#include "jacring/filtration.hpp"
#include "jacring/graded_quotient.hpp"
#include "jacring/jets.hpp"
#include "jacring/matrix.hpp"
#include "jacring/presentation.hpp"
#include "jacring/semigroup.hpp"

using namespace jacring;

namespace {

GradedQuotientOptions uncached() {
  GradedQuotientOptions o;
  o.cache = nullptr;
  return o;
}

void BM_SparseEchelonRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9), col(0, n - 1);
  std::vector<SparseRow> rows;
  for (int r = 0; r < n; ++r) {
    std::map<int, Integer> entries;
    for (int k = 0; k < 6; ++k) entries[col(rng)] = coef(rng);
    SparseRow row;
    for (auto& [c, v] : entries)
      if (v != 0) row.emplace_back(c, v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  for (auto _ : state) {
    SparseEchelon e(n);
    for (const auto& r : rows) e.insert(r);
    benchmark::DoNotOptimize(e.rank());
  }
}
BENCHMARK(BM_SparseEchelonRandom)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ExactRank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-20, 20);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = make_rational(coef(rng), 1 + std::abs(coef(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_ExactRank)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateModules(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), q = static_cast<int>(state.range(1));
  auto g = std::make_shared<const NumericalSemigroup>(std::vector<int>{p, q});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_modules(g).size());
}
BENCHMARK(BM_EnumerateModules)->Args({3, 10})->Args({5, 8})->Args({6, 7});

void BM_HilbertO(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), q = static_cast<int>(state.range(1));
  for (auto _ : state) {
    GradedQuotient g(build_IO(p, q), uncached());
    benchmark::DoNotOptimize(g.hilbert_function((p - 1) * (q - 1)));
  }
}
BENCHMARK(BM_HilbertO)->Args({3, 4})->Args({4, 7})->Args({5, 8})->Unit(benchmark::kMillisecond);

void BM_BettiJ(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), q = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(betti_J(p, q).total);
}
BENCHMARK(BM_BettiJ)->Args({3, 5})->Args({4, 5})->Args({4, 9})->Unit(benchmark::kMillisecond);

void BM_Implicitize(benchmark::State& state) {
  auto c = family_curve(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(implicitize(c).degree);
}
BENCHMARK(BM_Implicitize)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_PlanarStrict(benchmark::State& state) {
  auto model = mrig_equations(family_curve(3, static_cast<int>(state.range(0))), Rigidification::strict);
  for (auto _ : state) benchmark::DoNotOptimize(artinian_dims(model).total);
}
BENCHMARK(BM_PlanarStrict)->Arg(7)->Arg(9)->Iterations(1)->Unit(benchmark::kSecond);

}  // namespace

BENCHMARK_MAIN();
