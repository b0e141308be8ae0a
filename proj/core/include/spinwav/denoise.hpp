#pragma once

#include <cstddef>
#include <vector>

#include "spinwav/sphere.hpp"
#include "spinwav/wavelet_family.hpp"

namespace spinwav {

// Zero-mean Gaussian white noise in harmonic space: E|n_{lm}|^2 = sigma^2
// for every (l, m).
struct NoiseModel {
  double sigma = 0.0;
};

// Per-scale noise level sigma^{(j)} = sigma sqrt(sum_{ln} |psi^{(j)}_{ln}|^2)
// and hard threshold t^{(j)} = 3 sigma^{(j)}.  Scaling coefficients are not
// thresholded.
struct ThresholdPlan {
  int j_min = 0;
  std::vector<double> sigma_scale;
  std::vector<double> threshold;
};

// SNR(y) = 10 log10(||x||^2 / ||y - x||^2) in decibels, with energies summed
// over harmonic coefficients.  Returns +infinity when y equals x exactly.
double snr_db(const HarmonicCoeffs& x, const HarmonicCoeffs& y);

ThresholdPlan noise_sigma_per_scale(const WaveletFamily& family, double sigma);

// Survivor counts per scale from the last thresholding pass.
struct DenoiseStats {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> total;
};

// Hard-thresholding denoiser: analyse, zero wavelet coefficients with
// |W| < t^{(j)} (phase of survivors untouched), keep scaling coefficients,
// synthesise.  Multiresolution by default.
HarmonicCoeffs denoise(const HarmonicCoeffs& y, const WaveletFamily& family,
                       const NoiseModel& model, bool multires = true,
                       DenoiseStats* stats = nullptr);

}  // namespace spinwav
