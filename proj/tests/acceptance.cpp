// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spinwav/denoise.hpp"
#include "spinwav/polarization.hpp"
#include "spinwav/signal.hpp"
#include "spinwav/wavelet_transform.hpp"

using namespace spinwav;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double max_abs_diff(const HarmonicCoeffs& a, const HarmonicCoeffs& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  }
  return worst;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

// Criteria 1, 2 and 4 share one sweep: ten random signals per (L, s) at
// N = 5, alpha = 2, J0 = 0.
void criteria_roundtrip_parseval() {
  const std::vector<int> band_limits{32, 64, 128};
  const std::vector<int> spins{0, 1, 2};
  double worst_err = 0.0;
  double worst_energy_rel = 0.0;
  double mean_err_32 = 0.0, mean_err_128 = 0.0;

  for (int L : band_limits) {
    double mean = 0.0;
    int count = 0;
    for (int s : spins) {
      const WaveletFamily family = build_family({L, 2.0, 0, 5, s});
      std::mt19937_64 rng(1000 + 7 * L + s);
      for (int trial = 0; trial < 10; ++trial) {
        const HarmonicCoeffs f = random_coeffs(L, s, rng);
        const WaveletCoefficients w = analyze(f, family);
        const HarmonicCoeffs back = synthesize(w, family);
        const double err = max_abs_diff(f, back);
        worst_err = std::max(worst_err, err);
        mean += err;
        ++count;

        const double ec = coeff_energy(f);
        worst_energy_rel =
            std::max(worst_energy_rel, std::fabs(total_energy(w) - ec) / ec);
      }
    }
    mean /= count;
    if (L == 32) mean_err_32 = mean;
    if (L == 128) mean_err_128 = mean;
  }

  report(1, "exact wavelet round-trip", worst_err < 1e-10,
         fmt("max |synthesize(analyze(f)) - f| = %.2e (< 1e-10)", worst_err));
  const double ratio = mean_err_128 / mean_err_32;
  report(2, "round-trip error scaling",
         ratio <= 16.0,
         fmt("mean error L=128 / L=32 = %.2f (<= 16)", ratio));
  report(4, "Parseval frame energy", worst_energy_rel < 1e-10,
         fmt("max relative energy mismatch = %.2e (< 1e-10)", worst_energy_rel));
}

void criterion_admissibility() {
  double worst = 0.0;
  for (double alpha : {2.0, 3.0}) {
    for (int j_min : {0, 2}) {
      for (int n : {1, 3, 5}) {
        const WaveletFamily family = build_family({128, alpha, j_min, n, 0});
        worst = std::max(worst, check_admissibility(family));
      }
    }
  }
  report(3, "admissibility identity", worst < 1e-10,
         fmt("max residual over (alpha, J0, N) grid = %.2e (< 1e-10)", worst));
}

void criterion_complexity() {
  auto time_roundtrip = [](int L, bool multires, int trials) {
    const WaveletFamily family = build_family({L, 2.0, 0, 5, 2});
    std::mt19937_64 rng(55 + L);
    double total = 0.0;
    for (int t = 0; t < trials; ++t) {
      const HarmonicCoeffs f = random_coeffs(L, 2, rng);
      const double t0 = now_seconds();
      const WaveletCoefficients w =
          multires ? analyze_multires(f, family) : analyze(f, family);
      const HarmonicCoeffs back = synthesize(w, family);
      const double t1 = now_seconds();
      total += t1 - t0;
      if (max_abs_diff(f, back) > 1e-9) total += 1e9;  // trip the ratio check
    }
    return total / trials;
  };

  const double t64 = time_roundtrip(64, false, 5);
  const double t128 = time_roundtrip(128, false, 5);
  const double ratio = t128 / t64;
  const double full256 = time_roundtrip(256, false, 1);
  const double multi256 = time_roundtrip(256, true, 1);

  const bool pass = ratio >= 4.0 && ratio <= 16.0 && multi256 < full256;
  report(5, "O(L^3) cost and multiresolution speed-up", pass,
         fmt("t(128)/t(64) = %.1f (in [4,16]); L=256 multires %.2fs vs full %.2fs",
             ratio, multi256, full256));
}

void criterion_steerability() {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int n_dir : {2, 3, 5}) {
    const WaveletFamily family = build_family({32, 2.0, 0, n_dir, 2});
    const HarmonicCoeffs f = random_coeffs(32, 2, rng);
    const WaveletCoefficients w = analyze(f, family);
    for (int k = 0; k < 8; ++k) {
      const double gamma = kTwoPi * 0.5 * (uniform_pm1(rng) + 1.0);
      const WaveletFamily rotated = rotate_family(family, gamma);
      const WaveletCoefficients w_rot = analyze(f, rotated);
      for (int j = family.j_min(); j <= family.j_max(); ++j) {
        const SphereMap steered = steer(w, j, gamma);
        const RotationMap& expected = w_rot.scale(j);
        for (int b = 0; b < expected.grid().n_beta(); ++b) {
          for (int a = 0; a < expected.grid().n_alpha; ++a) {
            worst = std::max(worst, std::abs(steered(b, a) - expected(a, b, 0)));
          }
        }
      }
    }
  }
  report(6, "steerability", worst < 1e-8,
         fmt("max |steered - rotated-wavelet recomputation| = %.2e (< 1e-8)", worst));
}

HarmonicCoeffs real_scalar_field(int L, std::mt19937_64& rng) {
  HarmonicCoeffs x(L, 0);
  for (int l = 2; l < L; ++l) {
    x.at(l, 0) = uniform_pm1(rng);
    for (int m = 1; m <= l; ++m) {
      const Complex v{uniform_pm1(rng), uniform_pm1(rng)};
      x.at(l, m) = v;
      x.at(l, -m) = ((m % 2 == 0) ? 1.0 : -1.0) * std::conj(v);
    }
  }
  return x;
}

void criterion_eb_connection() {
  std::mt19937_64 rng(99);
  const int L = 32;
  double worst_two_path = 0.0;
  double worst_pure_e = 0.0;
  for (int n_dir : {1, 3}) {
    const WaveletFamily family = build_family({L, 2.0, 0, n_dir, 2});

    const StokesQU qu = eb_to_qu(
        {real_scalar_field(L, rng), real_scalar_field(L, rng), false});
    const EbWaveletMaps maps = eb_wavelet_connection(qu, family);
    const EBPair tilde = to_derivative_weighted(qu_to_eb(qu));
    const WaveletFamily scalar = lowered_scalar_family(family);
    const WaveletCoefficients we = analyze(tilde.e, scalar);
    const WaveletCoefficients wb = analyze(tilde.b, scalar);
    for (std::size_t k = 0; k < maps.e_tilde.size(); ++k) {
      for (std::size_t i = 0; i < maps.e_tilde[k].samples().size(); ++i) {
        worst_two_path = std::max(
            worst_two_path,
            std::abs(maps.e_tilde[k].samples()[i] - we.scales[k].samples()[i]));
        worst_two_path = std::max(
            worst_two_path,
            std::abs(maps.b_tilde[k].samples()[i] - wb.scales[k].samples()[i]));
      }
    }

    const StokesQU pure_e =
        eb_to_qu({real_scalar_field(L, rng), HarmonicCoeffs(L, 0), false});
    const EbWaveletMaps pe = eb_wavelet_connection(pure_e, family);
    for (const RotationMap& map : pe.b_tilde) {
      for (const Complex& v : map.samples()) {
        worst_pure_e = std::max(worst_pure_e, std::abs(v));
      }
    }
  }
  const bool pass = worst_two_path < 1e-8 && worst_pure_e < 1e-10;
  report(7, "E/B wavelet connection", pass,
         fmt("two-path max diff = %.2e (< 1e-8); pure-E B-path max = %.2e (< 1e-10)",
             worst_two_path, worst_pure_e));
}

void criterion_denoising() {
  const int L = 128;
  const HarmonicCoeffs x = oriented_bumps(L, 2, 42);
  const WaveletFamily directional = build_family({L, 2.0, 0, 4, 2});
  const WaveletFamily axisymmetric = build_family({L, 2.0, 0, 1, 2});

  int directional_wins = 0;
  double worst_input_offset = 0.0;
  double min_improvement = 1e300;
  for (int seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(2000 + seed);
    const NoisySignal noisy = add_noise_for_snr(x, 11.0, rng);
    const double snr_in = snr_db(x, noisy.y);
    worst_input_offset = std::max(worst_input_offset, std::fabs(snr_in - 11.0));

    const HarmonicCoeffs xd = denoise(noisy.y, directional, {noisy.sigma}, true);
    const HarmonicCoeffs xa = denoise(noisy.y, axisymmetric, {noisy.sigma}, true);
    const double snr_dir = snr_db(x, xd);
    const double snr_axi = snr_db(x, xa);
    if (snr_dir >= snr_axi) ++directional_wins;
    min_improvement = std::min(min_improvement, snr_dir - snr_in);
  }

  const bool pass = worst_input_offset <= 0.1 && min_improvement >= 3.0 &&
                    directional_wins >= 6;
  report(8, "hard-threshold denoising", pass,
         fmt("input SNR 11+-%.3f dB; min improvement %.1f dB (>= 3); "
             "directional wins %.0f/10",
             worst_input_offset, min_improvement,
             static_cast<double>(directional_wins)));
}

void criterion_oracle_equivalence() {
  const int L = 8;
  std::mt19937_64 rng(123);
  double worst = 0.0;

  for (int s : {0, 2}) {
    const HarmonicCoeffs c = random_coeffs(L, s, rng);
    const SphereGrid grid = build_grid(L);
    const SphereMap fast = inverse_sht(c, grid);
    const SphereMap slow = oracle::naive_inverse_sht(c, grid);
    for (std::size_t i = 0; i < fast.samples().size(); ++i) {
      worst = std::max(worst, std::abs(fast.samples()[i] - slow.samples()[i]));
    }
    worst = std::max(worst,
                     max_abs_diff(forward_sht(fast), oracle::naive_forward_sht(fast)));
  }

  WignerCoeffs wc(L, 3);
  for (int l = 0; l < L; ++l) {
    const int n_max = std::min(l, 2);
    for (int m = -l; m <= l; ++m) {
      for (int n = -n_max; n <= n_max; ++n) {
        wc.at(l, m, n) = Complex{uniform_pm1(rng), uniform_pm1(rng)};
      }
    }
  }
  const RotationGrid rgrid = build_rotation_grid(L, 3);
  const RotationMap map = inverse_wigner(wc, rgrid);
  const int nodes[5][3] = {{0, 0, 0}, {3, 1, 2}, {14, 7, 4}, {9, 3, 1}, {6, 5, 3}};
  for (const auto& node : nodes) {
    const Complex expected = oracle::naive_wigner_point(
        wc, rgrid.alpha(node[0]), rgrid.betas[node[1]], rgrid.gamma(node[2]));
    worst = std::max(worst, std::abs(map(node[0], node[1], node[2]) - expected));
  }
  const WignerCoeffs ffast = forward_wigner(map);
  const WignerCoeffs fslow = oracle::naive_forward_wigner(map);
  for (std::size_t i = 0; i < ffast.values().size(); ++i) {
    worst = std::max(worst, std::abs(ffast.values()[i] - fslow.values()[i]));
  }

  report(9, "direct-summation oracle equivalence", worst < 1e-12,
         fmt("max |fast - naive| = %.2e (< 1e-12)", worst));
}

}  // namespace

int main() {
  const double t0 = now_seconds();
  criteria_roundtrip_parseval();
  criterion_admissibility();
  criterion_complexity();
  criterion_steerability();
  criterion_eb_connection();
  criterion_denoising();
  criterion_oracle_equivalence();
  std::printf("%d criterion(s) failed; total time %.1f s\n", failures,
              now_seconds() - t0);
  return failures == 0 ? 0 : 1;
}
