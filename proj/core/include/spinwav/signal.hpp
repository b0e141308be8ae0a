#pragma once

#include <cstdint>
#include <random>

#include "spinwav/sphere.hpp"

namespace spinwav {

// Deterministic helpers built on mt19937_64 only, so that fixed seeds give
// identical streams across standard library implementations.

// Uniform in [-1, 1).
double uniform_pm1(std::mt19937_64& rng);

// Standard normal via Box-Muller.
double standard_normal(std::mt19937_64& rng);

// Band-limited test signal: real and imaginary parts of every valid (l, m)
// coefficient drawn uniformly from [-1, 1).  Rows with l < |spin| stay zero.
HarmonicCoeffs random_coeffs(int band_limit, int spin, std::mt19937_64& rng);

// Complex white noise with E|n_{lm}|^2 = sigma^2 on every valid row.
HarmonicCoeffs gaussian_noise(int band_limit, int spin, double sigma,
                              std::mt19937_64& rng);

// Deterministic synthetic signal: a sum of Gaussian-profile bumps in the
// (l, m) plane centred at high |m|/l, so the spatial features are oriented.
HarmonicCoeffs oriented_bumps(int band_limit, int spin, std::uint64_t seed);

// y = x + c n with c chosen so that snr_db(x, y) equals the target exactly;
// sigma is the per-coefficient standard deviation of the scaled noise.
struct NoisySignal {
  HarmonicCoeffs y;
  double sigma;
};

NoisySignal add_noise_for_snr(const HarmonicCoeffs& x, double target_snr_db,
                              std::mt19937_64& rng);

}  // namespace spinwav
