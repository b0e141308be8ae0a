#pragma once

#include <vector>

#include "spinwav/rotation.hpp"
#include "spinwav/sphere.hpp"
#include "spinwav/wavelet_family.hpp"

namespace spinwav {

// Output of the forward wavelet transform: one function on SO(3) per scale
// (orientation index gamma has 2N-1 samples at every scale) plus scalar
// scaling coefficients on the sphere.  Under multiresolution, scale j is
// carried at band limit L_j = min(ceil(alpha^{j+1}), L) and each map keeps
// its own grid metadata.
struct WaveletCoefficients {
  WaveletParams params;
  bool multires = false;
  std::vector<RotationMap> scales;  // index j - j_min
  SphereMap scaling;

  const RotationMap& scale(int j) const {
    return scales[static_cast<std::size_t>(j - params.j_min)];
  }
  RotationMap& scale(int j) {
    return scales[static_cast<std::size_t>(j - params.j_min)];
  }
};

// Forward transform at full resolution: every scale on the L-grid.
WaveletCoefficients analyze(const HarmonicCoeffs& f, const WaveletFamily& family);

// Forward transform with per-scale band limits.
WaveletCoefficients analyze_multires(const HarmonicCoeffs& f,
                                     const WaveletFamily& family);

// Inverse transform; recovers the harmonic coefficients exactly for
// coefficients produced by analyze/analyze_multires with the same family.
HarmonicCoeffs synthesize(const WaveletCoefficients& w, const WaveletFamily& family);

// Interpolation weights steering N basis orientations gamma_g = g pi / N to
// any continuous orientation.
struct SteeringWeights {
  explicit SteeringWeights(int n_directions);

  int n_directions;
  std::vector<double> angles;  // gamma_g

  // z(gamma) = (1/N) sum over the N azimuthal frequencies carried by the
  // directionality component.
  double z(double gamma) const;
};

// Wavelet-coefficient slice of scale j resampled at basis orientation
// gamma_g = g pi / N (exact Fourier interpolation along gamma).
SphereMap orientation_slice(const WaveletCoefficients& w, int j, int g);

// Wavelet-coefficient slice at a continuous orientation gamma, as the
// z-weighted sum of the N basis slices.
SphereMap steer(const WaveletCoefficients& w, int j, double gamma);

// Quadrature energy of all wavelet plus scaling coefficients; equals the
// harmonic energy of the analysed signal (tight frame with unit bounds).
double total_energy(const WaveletCoefficients& w);

}  // namespace spinwav
