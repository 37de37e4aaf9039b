#include <benchmark/benchmark.h>

#include <numbers>

#include <padebary/approximant.hpp>
#include <padebary/barycentric.hpp>
#include <padebary/pade.hpp>
#include <padebary/prony.hpp>

using namespace padebary;

namespace {

// Distinct poles on a ray and zeros on another; generic enough that every m builds.
CVector ray(int m, cplx start, cplx step) {
  CVector out;
  for (int i = 0; i <= m; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

void BM_PadeDiagonal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const FormalPowerSeries c = log1p_over_t_series(2 * m);
  for (auto _ : state) benchmark::DoNotOptimize(pade(c, m, m));
}
BENCHMARK(BM_PadeDiagonal)->DenseRange(2, 12, 2);

void BM_BpaForm1(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const FormalPowerSeries c = log1p_over_t_series(2 * m);
  const CVector pn = ray(m, {-1.5, 0.3}, {-0.8, 0.1});
  const CVector zn = ray(m, {2.0, -0.4}, {0.7, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(bpa_form1(c, pn, zn));
}
// Past m = 10 the moment matrix for these rays drops below the pivot threshold.
BENCHMARK(BM_BpaForm1)->DenseRange(2, 10, 2);

void BM_Pfpa(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  CVector coeffs(2 * k + 2);
  for (int j = 0; j <= k; ++j) {
    const cplx node = 1.0 + 0.3 * j;
    cplx power = 1.0;
    for (cplx& x : coeffs) {
      x += power;
      power *= node;
    }
  }
  const FormalPowerSeries c(coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(pfpa(c, k));
}
BENCHMARK(BM_Pfpa)->DenseRange(1, 7, 2);

void BM_EvaluateGrid(benchmark::State& state) {
  const FormalPowerSeries c = tan_over_t_series(4.0, 8);
  const double pi = std::numbers::pi;
  const Approximant r = bpa_form1(c, CVector{pi / 8, -pi / 8, 3 * pi / 8, -3 * pi / 8, 5 * pi / 8},
                                  CVector{pi / 4, -pi / 4, 3 * pi / 4, -3 * pi / 4, 5 * pi / 4});
  for (auto _ : state) {
    for (int i = 0; i < 601; ++i) benchmark::DoNotOptimize(evaluate(r, -1.5 + 3.0 * i / 600));
  }
  state.SetItemsProcessed(state.iterations() * 601);
}
BENCHMARK(BM_EvaluateGrid);

}  // namespace

BENCHMARK_MAIN();
