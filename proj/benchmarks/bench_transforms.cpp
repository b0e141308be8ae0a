#include <benchmark/benchmark.h>

#include <random>

#include "spinwav/signal.hpp"
#include "spinwav/wavelet_transform.hpp"

using namespace spinwav;

namespace {

void BM_ForwardInverseSht(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const HarmonicCoeffs f = random_coeffs(L, 2, rng);
  const SphereGrid grid = build_grid(L);
  for (auto _ : state) {
    const SphereMap map = inverse_sht(f, grid);
    const HarmonicCoeffs back = forward_sht(map);
    benchmark::DoNotOptimize(back.values().data());
  }
  state.SetComplexityN(L);
}
BENCHMARK(BM_ForwardInverseSht)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_ForwardInverseWigner(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const int N = 5;
  std::mt19937_64 rng(2);
  WignerCoeffs c(L, N);
  for (Complex& v : c.values()) v = Complex{uniform_pm1(rng), uniform_pm1(rng)};
  const RotationGrid grid = build_rotation_grid(L, N);
  for (auto _ : state) {
    const RotationMap map = inverse_wigner(c, grid);
    const WignerCoeffs back = forward_wigner(map);
    benchmark::DoNotOptimize(back.values().data());
  }
  state.SetComplexityN(L);
}
BENCHMARK(BM_ForwardInverseWigner)->RangeMultiplier(2)->Range(32, 128)->Complexity();

void wavelet_roundtrip(benchmark::State& state, bool multires) {
  const int L = static_cast<int>(state.range(0));
  const WaveletFamily family = build_family({L, 2.0, 0, 5, 2});
  std::mt19937_64 rng(3);
  const HarmonicCoeffs f = random_coeffs(L, 2, rng);
  for (auto _ : state) {
    const WaveletCoefficients w =
        multires ? analyze_multires(f, family) : analyze(f, family);
    const HarmonicCoeffs back = synthesize(w, family);
    benchmark::DoNotOptimize(back.values().data());
  }
  state.SetComplexityN(L);
}

void BM_WaveletRoundTrip(benchmark::State& state) { wavelet_roundtrip(state, false); }
void BM_WaveletRoundTripMultires(benchmark::State& state) {
  wavelet_roundtrip(state, true);
}
BENCHMARK(BM_WaveletRoundTrip)->RangeMultiplier(2)->Range(32, 128)->Complexity();
BENCHMARK(BM_WaveletRoundTripMultires)->RangeMultiplier(2)->Range(32, 256)->Complexity();

}  // namespace

BENCHMARK_MAIN();
