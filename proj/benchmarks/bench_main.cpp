#include "atlas/cyclo.h"
#include "atlas/intmat.h"

#include <benchmark/benchmark.h>

namespace {

atlas::IntMat dense_test_matrix(size_t n) {
  atlas::IntMat m(n, n);
  unsigned long long s = 12345;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      m(i, j) = static_cast<atlas::Int>((s >> 33) % 21) - 10;
    }
  return m;
}

void BM_smith_form(benchmark::State& state) {
  atlas::IntMat m = dense_test_matrix(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    auto s = atlas::smith_form(m);
    benchmark::DoNotOptimize(s.d.a.data());
  }
}
BENCHMARK(BM_smith_form)->Arg(4)->Arg(8);

void BM_cyclotomic_product(benchmark::State& state) {
  atlas::Cyclo x = atlas::zeta(60, 7) + atlas::zeta(60, 11);
  atlas::Cyclo y = atlas::zeta(60, 13) - atlas::zeta(60, 29);
  for (auto _ : state) {
    atlas::Cyclo z = x * y;
    benchmark::DoNotOptimize(&z);
  }
}
BENCHMARK(BM_cyclotomic_product);

}  // namespace

BENCHMARK_MAIN();
