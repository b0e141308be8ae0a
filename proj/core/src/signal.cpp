#include "spinwav/signal.hpp"

#include <cmath>

#include "spinwav/common.hpp"

namespace spinwav {

double uniform_pm1(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
  return 2.0 * u - 1.0;
}

double standard_normal(std::mt19937_64& rng) {
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

HarmonicCoeffs random_coeffs(int band_limit, int spin, std::mt19937_64& rng) {
  HarmonicCoeffs c(band_limit, spin);
  for (int l = std::abs(spin); l < band_limit; ++l) {
    for (int m = -l; m <= l; ++m) {
      const double re = uniform_pm1(rng);
      const double im = uniform_pm1(rng);
      c.at(l, m) = Complex{re, im};
    }
  }
  return c;
}

HarmonicCoeffs gaussian_noise(int band_limit, int spin, double sigma,
                              std::mt19937_64& rng) {
  HarmonicCoeffs c(band_limit, spin);
  const double component = sigma / std::sqrt(2.0);
  for (int l = std::abs(spin); l < band_limit; ++l) {
    for (int m = -l; m <= l; ++m) {
      const double re = component * standard_normal(rng);
      const double im = component * standard_normal(rng);
      c.at(l, m) = Complex{re, im};
    }
  }
  return c;
}

HarmonicCoeffs oriented_bumps(int band_limit, int spin, std::uint64_t seed) {
  HarmonicCoeffs c(band_limit, spin);
  std::mt19937_64 rng(seed);
  const int L = band_limit;

  // Each feature is a Gaussian l-profile with a narrow azimuthal spectrum
  // (an elongated atom in its own frame), placed on the sphere by a random
  // rotation.  Spatially localised and oriented.
  const int n_bumps = 12;
  for (int k = 0; k < n_bumps; ++k) {
    const double frac = (n_bumps == 1) ? 0.0 : static_cast<double>(k) / (n_bumps - 1);
    const double l_centre =
        (L / 16.0) * std::pow(10.0, frac) + 2.0 * uniform_pm1(rng);
    const double width = 1.5 + 0.06 * l_centre;

    HarmonicCoeffs atom(L, spin);
    const int l_lo = std::max(std::abs(spin),
                              static_cast<int>(l_centre - 4 * width));
    const int l_hi = std::min(L - 1, static_cast<int>(l_centre + 4 * width) + 1);
    double energy = 0.0;
    for (int l = std::max(l_lo, 3); l <= l_hi; ++l) {
      const double env = std::exp(-0.5 * std::pow((l - l_centre) / width, 2));
      for (int m = -3; m <= 3; ++m) {
        if (std::abs(m) > l) continue;
        // Orientation content peaked at |m| = 2.
        const double g = std::exp(-0.5 * std::pow(std::abs(m) - 2.0, 2));
        const Complex v = env * g * Complex{1.0, 0.0};
        atom.at(l, m) = v;
        energy += std::norm(v);
      }
    }
    if (energy == 0.0) continue;
    const double amp = 1.0 / std::sqrt(energy);

    const EulerAngles rho{kTwoPi * 0.5 * (uniform_pm1(rng) + 1.0),
                          std::acos(0.9 * uniform_pm1(rng)),
                          kTwoPi * 0.5 * (uniform_pm1(rng) + 1.0)};
    const HarmonicCoeffs placed = rotate_harmonics(atom, rho);
    for (std::size_t i = 0; i < c.values().size(); ++i) {
      c.values()[i] += amp * placed.values()[i];
    }
  }
  return c;
}

NoisySignal add_noise_for_snr(const HarmonicCoeffs& x, double target_snr_db,
                              std::mt19937_64& rng) {
  HarmonicCoeffs unit = gaussian_noise(x.band_limit(), x.spin(), 1.0, rng);
  const double signal_energy = coeff_energy(x);
  const double noise_energy = coeff_energy(unit);
  const double wanted = signal_energy * std::pow(10.0, -target_snr_db / 10.0);
  const double c = std::sqrt(wanted / noise_energy);

  NoisySignal out{x, c};
  for (std::size_t i = 0; i < out.y.values().size(); ++i) {
    out.y.values()[i] += c * unit.values()[i];
  }
  return out;
}

}  // namespace spinwav
