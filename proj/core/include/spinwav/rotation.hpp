#pragma once

#include <cstddef>
#include <vector>

#include "spinwav/common.hpp"

namespace spinwav {

// Separable sampling of SO(3): 2L-1 equiangular alpha nodes, L exact
// Gauss-Legendre beta nodes, and an odd number of equiangular gamma nodes
// (2N-1 for azimuthal band-limit N).
struct RotationGrid {
  int band_limit = 0;          // L
  int n_alpha = 0;             // 2L-1
  std::vector<double> betas;   // L colatitudes, ascending
  std::vector<double> weights; // matching quadrature weights
  int n_gamma = 0;             // 2N-1

  int n_beta() const { return static_cast<int>(betas.size()); }
  int azimuthal_band_limit() const { return (n_gamma + 1) / 2; }
  std::size_t sample_count() const {
    return static_cast<std::size_t>(n_alpha) * betas.size() * n_gamma;
  }
  double alpha(int ia) const { return kTwoPi * ia / n_alpha; }
  double gamma(int ig) const { return kTwoPi * ig / n_gamma; }
};

RotationGrid build_rotation_grid(int band_limit, int azimuthal_band_limit);

// Wigner coefficients f^l_{mn} of a band-limited function on SO(3).
// Index set: 0 <= l < L, |m| <= l, |n| <= min(l, N-1).  Storage is n-major
// with a full triangular (l, m) block per n; out-of-set entries are zero.
class WignerCoeffs {
 public:
  WignerCoeffs(int band_limit, int azimuthal_band_limit);

  int band_limit() const { return band_limit_; }
  int azimuthal_band_limit() const { return n_band_; }

  Complex operator()(int l, int m, int n) const { return values_[index(l, m, n)]; }
  Complex& at(int l, int m, int n) { return values_[index(l, m, n)]; }

  std::vector<Complex>& values() { return values_; }
  const std::vector<Complex>& values() const { return values_; }

  std::size_t index(int l, int m, int n) const {
    return static_cast<std::size_t>(n + n_band_ - 1) * band_limit_ * band_limit_ +
           static_cast<std::size_t>(l) * l + l + m;
  }

 private:
  int band_limit_;
  int n_band_;
  std::vector<Complex> values_;
};

// Samples f(alpha_a, beta_b, gamma_g) on a RotationGrid.
class RotationMap {
 public:
  explicit RotationMap(RotationGrid grid);

  const RotationGrid& grid() const { return grid_; }

  Complex operator()(int ia, int ib, int ig) const { return samples_[index(ia, ib, ig)]; }
  Complex& at(int ia, int ib, int ig) { return samples_[index(ia, ib, ig)]; }

  std::vector<Complex>& samples() { return samples_; }
  const std::vector<Complex>& samples() const { return samples_; }

  // beta-major internally: per-beta (alpha, gamma) planes are contiguous.
  std::size_t index(int ia, int ib, int ig) const {
    return (static_cast<std::size_t>(ib) * grid_.n_alpha + ia) * grid_.n_gamma + ig;
  }

 private:
  RotationGrid grid_;
  std::vector<Complex> samples_;
};

// Synthesis: f(rho) = sum_{lmn} (2l+1)/(8 pi^2) f^l_{mn} D^{l*}_{mn}(rho).
RotationMap inverse_wigner(const WignerCoeffs& coeffs, const RotationGrid& grid);

// Analysis: f^l_{mn} = <f, D^{l*}_{mn}>; exact for band-limited input.
WignerCoeffs forward_wigner(const RotationMap& map);

// Quadrature of |f|^2 over SO(3).
double map_energy(const RotationMap& map);

// sum_{lmn} (2l+1)/(8 pi^2) |f^l_{mn}|^2, the Parseval counterpart of
// map_energy for band-limited maps.
double coeff_energy(const WignerCoeffs& coeffs);

}  // namespace spinwav
