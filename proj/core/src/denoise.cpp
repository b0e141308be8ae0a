#include "spinwav/denoise.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "spinwav/wavelet_transform.hpp"

namespace spinwav {

double snr_db(const HarmonicCoeffs& x, const HarmonicCoeffs& y) {
  if (x.band_limit() != y.band_limit() || x.spin() != y.spin()) {
    throw std::invalid_argument("snr_db: signal shapes do not match");
  }
  double err = 0.0;
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    err += std::norm(y.values()[i] - x.values()[i]);
  }
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(coeff_energy(x) / err);
}

ThresholdPlan noise_sigma_per_scale(const WaveletFamily& family, double sigma) {
  if (sigma < 0.0) {
    throw std::invalid_argument("noise_sigma_per_scale: sigma must be >= 0");
  }
  const WaveletParams& p = family.params();
  ThresholdPlan plan;
  plan.j_min = p.j_min;
  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    double mass = 0.0;
    for (int l = 0; l < p.band_limit; ++l) {
      for (int n = -(p.n_directions - 1); n <= p.n_directions - 1; ++n) {
        mass += std::norm(family.psi(j, l, n));
      }
    }
    const double s = sigma * std::sqrt(mass);
    plan.sigma_scale.push_back(s);
    plan.threshold.push_back(3.0 * s);
  }
  return plan;
}

HarmonicCoeffs denoise(const HarmonicCoeffs& y, const WaveletFamily& family,
                       const NoiseModel& model, bool multires,
                       DenoiseStats* stats) {
  const ThresholdPlan plan = noise_sigma_per_scale(family, model.sigma);
  WaveletCoefficients w =
      multires ? analyze_multires(y, family) : analyze(y, family);

  if (stats) {
    stats->kept.assign(w.scales.size(), 0);
    stats->total.assign(w.scales.size(), 0);
  }
  for (std::size_t k = 0; k < w.scales.size(); ++k) {
    const double t = plan.threshold[k];
    std::size_t kept = 0;
    for (Complex& v : w.scales[k].samples()) {
      if (std::abs(v) < t) {
        v = Complex{};
      } else {
        ++kept;
      }
    }
    if (stats) {
      stats->kept[k] = kept;
      stats->total[k] = w.scales[k].samples().size();
    }
  }
  return synthesize(w, family);
}

}  // namespace spinwav
