#pragma once

#include <vector>

#include "spinwav/rotation.hpp"
#include "spinwav/sphere.hpp"
#include "spinwav/wavelet_family.hpp"
#include "spinwav/wavelet_transform.hpp"

namespace spinwav {

// Spin +/-2 harmonic coefficients of (Q + iU) and (Q - iU).
struct StokesQU {
  HarmonicCoeffs plus;   // spin +2
  HarmonicCoeffs minus;  // spin -2
};

// Parity even/odd scalar potentials of a spin-2 field.  The derivative
// weighted variants carry the factor sqrt((l+2)!/(l-2)!); rows with l < 2
// are zero in both variants.
struct EBPair {
  HarmonicCoeffs e;  // spin 0
  HarmonicCoeffs b;  // spin 0
  bool derivative_weighted = false;
};

// E_{lm} = -(p_{lm} + m_{lm})/2,  B_{lm} = i (p_{lm} - m_{lm})/2, with p, m
// the spin +/-2 coefficients.  Returns the physical (E, B) variant.
EBPair qu_to_eb(const StokesQU& qu);

// Exact inverse of qu_to_eb.
StokesQU eb_to_qu(const EBPair& eb);

// Multiplies/divides by sqrt((l+2)!/(l-2)!) to move between variants.
EBPair to_derivative_weighted(const EBPair& eb);
EBPair to_physical(const EBPair& eb);

// Coefficient-space action of the spin-lowering operator applied `times`
// times: each application maps spin s to s-1 and multiplies row l by
// -sqrt((l+s)(l-s+1)).  Rows that would violate |spin| <= l are zeroed.
HarmonicCoeffs spin_lower_harmonic(const HarmonicCoeffs& coeffs, int times);

// Scalar wavelet family whose double spin-raise reproduces the given spin-2
// family: psi-hat_{ln} = psi_{ln} / sqrt((l+2)!/(l-2)!), spin tag 0.  Used
// to run the scalar transforms of the derivative-weighted E/B signals.
WaveletFamily lowered_scalar_family(const WaveletFamily& family);

// Per-scale wavelet coefficients of the derivative-weighted E and B signals.
struct EbWaveletMaps {
  std::vector<RotationMap> e_tilde;
  std::vector<RotationMap> b_tilde;
};

// Computes the spin-2 wavelet coefficients W of (Q + iU) and returns
// (-Re W, -Im W), which equal the scalar wavelet transforms of the
// derivative-weighted E and B signals under lowered_scalar_family.
EbWaveletMaps eb_wavelet_connection(const StokesQU& qu, const WaveletFamily& family);

}  // namespace spinwav
