#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spinwav/wavelet_family.hpp"

using namespace spinwav;

TEST_CASE("schwartz bump values") {
  CHECK(schwartz_s(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(schwartz_s(1.0) == 0.0);
  CHECK(schwartz_s(-1.0) == 0.0);
  CHECK(schwartz_s(1.5) == 0.0);
  CHECK(schwartz_s(0.5) == doctest::Approx(std::exp(-4.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("k_alpha clamps and matches the brute-force quadrature") {
  CHECK(k_alpha(0.1, 2.0) == 1.0);
  CHECK(k_alpha(0.5, 2.0) == 1.0);
  CHECK(k_alpha(1.5, 2.0) == 0.0);
  CHECK(k_alpha(1.0, 2.0) == 0.0);
  for (double t : {0.55, 0.707, 0.9, 0.99}) {
    const double got = k_alpha(t, 2.0);
    const double expected = oracle::k_alpha_brute(t, 2.0);
    CHECK(got > 0.0);
    CHECK(got < 1.0);
    CHECK(std::fabs(got - expected) < 1e-10);
  }
  CHECK(std::fabs(k_alpha(0.5, 3.0) - oracle::k_alpha_brute(0.5, 3.0)) < 1e-10);
  CHECK_THROWS_AS(k_alpha(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("k_alpha is non-increasing") {
  double prev = 2.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = 0.4 + 0.7 * i / 400.0;
    const double v = k_alpha(t, 2.0);
    if (prev <= 1.0) CHECK(v <= prev + 1e-12);
    prev = v;
  }
}

TEST_CASE("kernel peak, support, and interior value") {
  WaveletParams params{32, 2.0, 0, 1, 0};
  CHECK(kernel(3, 8, params) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kernel(3, 3, params) == 0.0);
  CHECK(kernel(3, 4, params) == 0.0);   // support endpoints carry value zero
  CHECK(kernel(3, 16, params) == 0.0);
  CHECK(kernel(3, 12, params) > 0.0);
  const double expected =
      std::sqrt(oracle::k_alpha_brute(6.0 / 16.0, 2.0) - oracle::k_alpha_brute(6.0 / 8.0, 2.0));
  CHECK(std::fabs(kernel(3, 6, params) - expected) < 1e-10);
  CHECK_THROWS_AS(kernel(12, 3, params), std::invalid_argument);
}

TEST_CASE("kernel vanishes exactly outside its compact support") {
  WaveletParams params{64, 2.0, 0, 1, 0};
  for (int j = 0; j <= max_scale(2.0, 64); ++j) {
    const int lo = static_cast<int>(std::floor(std::pow(2.0, j - 1) + 1e-9));
    const int hi = static_cast<int>(std::ceil(std::pow(2.0, j + 1) - 1e-9));
    for (int l = 0; l < 64; ++l) {
      const double v = kernel(j, l, params);
      if (l < lo || l > hi) CHECK(v == 0.0);
    }
  }
}

TEST_CASE("max scale follows ceil(log_alpha(L-1))") {
  CHECK(max_scale(2.0, 128) == 7);
  CHECK(max_scale(2.0, 129) == 7);
  CHECK(max_scale(2.0, 2) == 0);
  CHECK(max_scale(3.0, 128) == 5);
}

TEST_CASE("axisymmetric directionality: single m = 0 line") {
  const Directionality zeta = directionality({16, 2.0, 0, 1, 0});
  for (int l = 1; l < 16; ++l) {
    CHECK(zeta(l, 0) == Complex{1.0, 0.0});
  }
}

TEST_CASE("N = 2 directionality: i/sqrt(2) at m = +/-1") {
  const Directionality zeta = directionality({16, 2.0, 0, 2, 0});
  for (int l = 1; l < 16; ++l) {
    CHECK(std::abs(zeta(l, 1) - Complex{0.0, std::sqrt(0.5)}) < 1e-14);
    CHECK(std::abs(zeta(l, -1) - Complex{0.0, std::sqrt(0.5)}) < 1e-14);
    CHECK(std::abs(zeta(l, 0)) == 0.0);
  }
}

TEST_CASE("directionality rows are unit-normalised wherever populated") {
  for (int N : {1, 2, 3, 4, 5, 6}) {
    const Directionality zeta = directionality({24, 2.0, 0, N, 0});
    for (int l = 0; l < 24; ++l) {
      double sum = 0.0;
      for (int m = -(N - 1); m <= N - 1; ++m) sum += std::norm(zeta(l, m));
      if (sum > 0.0) CHECK(std::fabs(sum - 1.0) < 1e-12);
      if (l >= 1) CHECK(sum > 0.0);  // every l >= 1 row is populated
    }
  }
}

TEST_CASE("directionality parity structure and reflection symmetry") {
  for (int N : {2, 3, 4, 5}) {
    const Directionality zeta = directionality({24, 2.0, 0, N, 0});
    const double sign = (N - 1) % 2 == 0 ? 1.0 : -1.0;
    for (int l = 0; l < 24; ++l) {
      for (int m = -(N - 1); m <= N - 1; ++m) {
        const Complex v = zeta(l, m);
        if ((N + m) % 2 == 0) CHECK(std::abs(v) == 0.0);  // upsilon kills these
        // zeta(theta, -phi) = (-1)^{N-1} zeta(theta, phi) in harmonic space.
        CHECK(std::abs(zeta(l, -m) - sign * std::conj(v)) < 1e-14);
      }
    }
  }
}

TEST_CASE("family scale count and admissibility") {
  const WaveletFamily family = build_family({128, 2.0, 2, 1, 0});
  CHECK(family.j_max() == 7);
  CHECK(family.scale_count() == 6);
  CHECK(check_admissibility(family) < 1e-10);
}

TEST_CASE("admissibility holds across parameters") {
  CHECK(check_admissibility(build_family({64, 2.0, 0, 3, 2})) < 1e-10);
  CHECK(check_admissibility(build_family({64, 3.0, 1, 2, -1})) < 1e-10);
  CHECK(check_admissibility(build_family({32, 1.7, 0, 4, 0})) < 1e-10);
}

TEST_CASE("telescoping of squared kernels against the scaling kernel") {
  const WaveletParams params{64, 2.0, 1, 1, 0};
  const KernelTable table = build_kernel_table(params);
  for (int l = 0; l < 64; ++l) {
    double sum = table.scaling[l] * table.scaling[l];
    for (int j = table.j_min; j <= table.j_max; ++j) {
      const double k = table.kappa[j - table.j_min][l];
      sum += k * k;
    }
    CHECK(std::fabs(sum - 1.0) < 1e-10);
  }
}

TEST_CASE("deleting a scale leaves a residual equal to its kappa^2 mass") {
  const WaveletParams params{64, 2.0, 0, 3, 0};
  const WaveletFamily family = build_family(params);

  const int dropped = 3;
  std::vector<std::vector<Complex>> psi;
  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    std::vector<Complex> table = family.psi_table(j);
    if (j == dropped) table.assign(table.size(), Complex{});
    psi.push_back(std::move(table));
  }
  std::vector<double> phi(64);
  for (int l = 0; l < 64; ++l) phi[l] = family.phi(l);
  const WaveletFamily crippled = WaveletFamily::from_components(
      params, std::move(psi), std::move(phi), family.kernels());

  double expected = 0.0;
  for (int l = 0; l < 64; ++l) {
    const double k = family.kernels().kappa[dropped - family.j_min()][l];
    expected = std::max(expected, k * k);
  }
  const double residual = check_admissibility(crippled);
  CHECK(residual > 0.1);
  CHECK(std::fabs(residual - expected) < 1e-10);
}

TEST_CASE("degenerate two-column family at L = 2") {
  const WaveletFamily family = build_family({2, 2.0, 0, 1, 0});
  CHECK(family.j_max() == 0);
  CHECK(family.scale_count() == 1);
  CHECK(check_admissibility(family) < 1e-10);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(build_family({64, 1.0, 0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({64, 2.0, -1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({64, 2.0, 9, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({64, 2.0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({64, 2.0, 0, 65, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({64, 2.0, 0, 1, 64}), std::invalid_argument);
}
