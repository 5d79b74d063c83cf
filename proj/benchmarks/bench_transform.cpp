// Microbenchmarks for the transform pipeline: the defining-integral oracle
// against the closed forms it certifies, and the exponential-sum kernels.
#include <benchmark/benchmark.h>

#include "sl2ft/bessel.hpp"
#include "sl2ft/exp_sums.hpp"
#include "sl2ft/report.hpp"
#include "sl2ft/transform.hpp"

using namespace sl2ft;

namespace {

// A ramified close point: every piece of machinery (Gauss sums, shell sums,
// the Gaussian t-integral) is exercised.
struct Fixture {
  Qp k{5};
  DualOrbit x;
  OrbitPoint y;
  Fixture()
      : x(AdditiveCharacter::standard(k), k.unit_pow(1, -1), k.uniformiser()),
        y{k.unit_pow(1, 1), k.uniformiser()} {}
};

void BM_MockMuOracle(benchmark::State& state) {
  Fixture f;
  for (auto _ : state) benchmark::DoNotOptimize(mock_mu_oracle(f.k, f.x, f.y));
}
BENCHMARK(BM_MockMuOracle);

void BM_MuHatClosed(benchmark::State& state) {
  Fixture f;
  for (auto _ : state) benchmark::DoNotOptimize(mu_hat_closed(f.k, f.x, f.y));
}
BENCHMARK(BM_MuHatClosed);

void BM_BesselOracle(benchmark::State& state) {
  Qp k(5);
  AdditiveCharacter phi = AdditiveCharacter::standard(k);
  MultiplicativeCharacter chi(0.5, SquareClass::Pi);
  PAdic u = k.unit_pow(1, -3), v = k.unit_pow(2, -3);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_oracle(chi, u, v, phi));
}
BENCHMARK(BM_BesselOracle);

void BM_BesselClosed(benchmark::State& state) {
  Qp k(5);
  AdditiveCharacter phi = AdditiveCharacter::standard(k);
  MultiplicativeCharacter chi(0.5, SquareClass::Pi);
  PAdic u = k.unit_pow(1, -3), v = k.unit_pow(2, -3);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_closed(chi, u, v, phi));
}
BENCHMARK(BM_BesselClosed);

void BM_GaussSum(benchmark::State& state) {
  Qp k(static_cast<long long>(state.range(0)));
  AdditiveCharacter phi = AdditiveCharacter::standard(k);
  PAdic w = k.uniformiser();
  for (auto _ : state) benchmark::DoNotOptimize(gauss_sum(w, phi));
}
BENCHMARK(BM_GaussSum)->Arg(5)->Arg(31)->Arg(101);

void BM_QuickGrid(benchmark::State& state) {
  Qp k(3);
  GridSpec spec;
  spec.restrict_to_quick();
  for (auto _ : state) benchmark::DoNotOptimize(run_grid(k, spec));
}
BENCHMARK(BM_QuickGrid);

}  // namespace

BENCHMARK_MAIN();
