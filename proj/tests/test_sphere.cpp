#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spinwav/signal.hpp"
#include "spinwav/sphere.hpp"

using namespace spinwav;

namespace {

double max_coeff_diff(const HarmonicCoeffs& a, const HarmonicCoeffs& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("constant signal: f_00 = sqrt(4 pi) gives a unit map") {
  HarmonicCoeffs c(8, 0);
  c.at(0, 0) = std::sqrt(kFourPi);
  const SphereMap map = inverse_sht(c, build_grid(8));
  for (const Complex& v : map.samples()) {
    CHECK(std::abs(v - Complex{1.0, 0.0}) < 1e-14);
  }
}

TEST_CASE("all-zero coefficients give an all-zero map") {
  HarmonicCoeffs c(6, 2);
  const SphereMap map = inverse_sht(c, build_grid(6));
  for (const Complex& v : map.samples()) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("spin-2 delta matches the pointwise d-function oracle") {
  HarmonicCoeffs c(6, 2);
  c.at(2, 1) = 1.0;
  const SphereGrid grid = build_grid(6);
  const SphereMap map = inverse_sht(c, grid);
  for (int t = 0; t < grid.n_theta(); ++t) {
    for (int p = 0; p < grid.n_phi; ++p) {
      const double phi = kTwoPi * p / grid.n_phi;
      const Complex expected = oracle::spin_sph_harm(2, 2, 1, grid.thetas[t], phi);
      CHECK(std::abs(map(t, p) - expected) < 1e-14);
    }
  }
}

TEST_CASE("forward recovers a delta placed by the inverse") {
  HarmonicCoeffs c(8, 0);
  c.at(3, -2) = 1.0;
  const HarmonicCoeffs back = forward_sht(inverse_sht(c, build_grid(8)));
  for (int l = 0; l < 8; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex expected = (l == 3 && m == -2) ? Complex{1.0, 0.0} : Complex{};
      CHECK(std::abs(back(l, m) - expected) < 1e-12);
    }
  }
}

TEST_CASE("round-trip of random spin-2 coefficients at L = 32") {
  std::mt19937_64 rng(7);
  const HarmonicCoeffs c = random_coeffs(32, 2, rng);
  const HarmonicCoeffs back = forward_sht(inverse_sht(c, build_grid(32)));
  CHECK(max_coeff_diff(c, back) < 1e-12);
}

TEST_CASE("round-trip across band limits and spins") {
  std::mt19937_64 rng(11);
  for (int L : {1, 2, 3, 5, 16, 64, 256}) {
    for (int s : {0, -1, 1, -4, 4}) {
      if (std::abs(s) >= L) continue;
      const HarmonicCoeffs c = random_coeffs(L, s, rng);
      const HarmonicCoeffs back = forward_sht(inverse_sht(c, build_grid(L)));
      CHECK(max_coeff_diff(c, back) < 1e-10);
    }
  }
}

TEST_CASE("round-trip error growth is at most linear in L (with slack)") {
  std::mt19937_64 rng(13);
  auto mean_err = [&](int L) {
    double total = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const HarmonicCoeffs c = random_coeffs(L, 2, rng);
      total += max_coeff_diff(c, forward_sht(inverse_sht(c, build_grid(L))));
    }
    return total / 3.0;
  };
  const double e32 = mean_err(32);
  const double e256 = mean_err(256);
  CHECK(e256 / e32 <= 8.0 * 4.0);
}

TEST_CASE("agrees with direct-summation transforms at L = 8") {
  std::mt19937_64 rng(17);
  for (int s : {0, 1, -2}) {
    const HarmonicCoeffs c = random_coeffs(8, s, rng);
    const SphereGrid grid = build_grid(8);
    const SphereMap fast = inverse_sht(c, grid);
    const SphereMap slow = oracle::naive_inverse_sht(c, grid);
    for (std::size_t i = 0; i < fast.samples().size(); ++i) {
      CHECK(std::abs(fast.samples()[i] - slow.samples()[i]) < 1e-12);
    }
    const HarmonicCoeffs ffast = forward_sht(fast);
    const HarmonicCoeffs fslow = oracle::naive_forward_sht(fast);
    CHECK(max_coeff_diff(ffast, fslow) < 1e-12);
  }
}

TEST_CASE("conjugate symmetry: conj map analysed at -s matches (-1)^{s+m} rule") {
  std::mt19937_64 rng(19);
  const int L = 12;
  const HarmonicCoeffs x = random_coeffs(L, 2, rng);
  const SphereGrid grid = build_grid(L);
  SphereMap map = inverse_sht(x, grid);
  SphereMap conj_map(grid, -2);
  for (std::size_t i = 0; i < map.samples().size(); ++i) {
    conj_map.samples()[i] = std::conj(map.samples()[i]);
  }
  const HarmonicCoeffs y = forward_sht(conj_map);
  for (int l = 2; l < L; ++l) {
    for (int m = -l; m <= l; ++m) {
      const double sign = ((2 + m) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(std::conj(x(l, m)) - sign * y(l, -m)) < 1e-12);
    }
  }
}

TEST_CASE("Parseval: grid energy equals coefficient energy") {
  std::mt19937_64 rng(23);
  const HarmonicCoeffs c = random_coeffs(48, 1, rng);
  const SphereMap map = inverse_sht(c, build_grid(48));
  const double eg = map_energy(map);
  const double ec = coeff_energy(c);
  CHECK(std::fabs(eg - ec) / ec < 1e-10);
}

TEST_CASE("rotation by the identity is the identity") {
  std::mt19937_64 rng(29);
  const HarmonicCoeffs c = random_coeffs(16, 2, rng);
  const HarmonicCoeffs r = rotate_harmonics(c, {0.0, 0.0, 0.0});
  CHECK(max_coeff_diff(c, r) < 1e-13);
}

TEST_CASE("azimuthal rotation is a diagonal phase") {
  std::mt19937_64 rng(31);
  const double gamma = 0.9;
  const HarmonicCoeffs c = random_coeffs(12, 1, rng);
  const HarmonicCoeffs r = rotate_harmonics(c, {0.0, 0.0, gamma});
  for (int l = 1; l < 12; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex expected = std::polar(1.0, -m * gamma) * c(l, m);
      CHECK(std::abs(r(l, m) - expected) < 1e-13);
    }
  }
}

TEST_CASE("composite rotation matches the composed rotation") {
  std::mt19937_64 rng(37);
  const HarmonicCoeffs c = random_coeffs(16, 2, rng);

  // rho follows from composing rho1 (applied second) with rho2 (applied
  // first): R(rho) = R(rho1) R(rho2).
  const EulerAngles rho1{0.7, 0.0, 0.0};
  const EulerAngles rho2{0.0, 1.1, 0.4};
  const EulerAngles rho{0.7, 1.1, 0.4};

  const HarmonicCoeffs once = rotate_harmonics(c, rho);
  const HarmonicCoeffs twice = rotate_harmonics(rotate_harmonics(c, rho2), rho1);
  CHECK(max_coeff_diff(once, twice) < 1e-10);
}

TEST_CASE("general composite rotation via the oracle D-matrix product") {
  std::mt19937_64 rng(41);
  const int L = 8;
  const HarmonicCoeffs c = random_coeffs(L, 2, rng);
  const EulerAngles rho1{0.6, 0.8, 1.9};
  const EulerAngles rho2{2.1, 0.5, 0.3};

  const HarmonicCoeffs twice = rotate_harmonics(rotate_harmonics(c, rho2), rho1);

  // Expected coefficients from the additive property, using oracle
  // D-functions: (R1 R2 f)_{lm} = sum_k [sum_n D1_{mn} D2_{nk}] f_{lk}.
  for (int l = 2; l < L; ++l) {
    for (int m = -l; m <= l; ++m) {
      Complex acc{};
      for (int k = -l; k <= l; ++k) {
        Complex d{};
        for (int n = -l; n <= l; ++n) {
          d += oracle::wigner_big_d(l, m, n, rho1) * oracle::wigner_big_d(l, n, k, rho2);
        }
        acc += d * c(l, k);
      }
      CHECK(std::abs(twice(l, m) - acc) < 1e-10);
    }
  }
}

TEST_CASE("dimension errors are rejected") {
  HarmonicCoeffs c(8, 0);
  CHECK_THROWS_AS(inverse_sht(c, build_grid(9)), std::invalid_argument);
  CHECK_THROWS_AS(HarmonicCoeffs(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(HarmonicCoeffs(0, 0), std::invalid_argument);
}
