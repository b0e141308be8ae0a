#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spinwav/common.hpp"

namespace spinwav {

// Quadrature grid over S^2: Gauss-Legendre colatitudes (exact for integrands
// polynomial of degree <= 2L-1 in cos(theta)) and 2L-1 equiangular
// longitudes.  Weights integrate sin(theta) dtheta and sum to 2.
struct SphereGrid {
  int band_limit = 0;
  std::vector<double> thetas;   // ascending colatitudes, radians
  std::vector<double> weights;  // Gauss-Legendre weights in cos(theta)
  int n_phi = 0;

  int n_theta() const { return static_cast<int>(thetas.size()); }
  std::size_t sample_count() const {
    return thetas.size() * static_cast<std::size_t>(n_phi);
  }
};

SphereGrid build_grid(int band_limit);

// Spin spherical harmonic coefficients of a signal band-limited at L.
// Triangular storage with exactly L^2 entries; index l^2 + l + m.
// Entries with l < |spin| are zero.
class HarmonicCoeffs {
 public:
  HarmonicCoeffs(int band_limit, int spin);

  int band_limit() const { return band_limit_; }
  int spin() const { return spin_; }

  Complex operator()(int l, int m) const { return values_[index(l, m)]; }
  Complex& at(int l, int m) { return values_[index(l, m)]; }

  std::vector<Complex>& values() { return values_; }
  const std::vector<Complex>& values() const { return values_; }

  static std::size_t index(int l, int m) {
    return static_cast<std::size_t>(l) * l + l + m;
  }

 private:
  int band_limit_;
  int spin_;
  std::vector<Complex> values_;
};

// Samples of a spin signal on a SphereGrid, theta-major.
class SphereMap {
 public:
  SphereMap(SphereGrid grid, int spin);

  const SphereGrid& grid() const { return grid_; }
  int spin() const { return spin_; }

  Complex operator()(int itheta, int iphi) const {
    return samples_[static_cast<std::size_t>(itheta) * grid_.n_phi + iphi];
  }
  Complex& at(int itheta, int iphi) {
    return samples_[static_cast<std::size_t>(itheta) * grid_.n_phi + iphi];
  }

  std::vector<Complex>& samples() { return samples_; }
  const std::vector<Complex>& samples() const { return samples_; }

 private:
  SphereGrid grid_;
  int spin_;
  std::vector<Complex> samples_;
};

// Synthesis: samples(w) = sum_{lm} f_{lm} sY_{lm}(w), Condon-Shortley phase.
SphereMap inverse_sht(const HarmonicCoeffs& coeffs, const SphereGrid& grid);

// Analysis: f_{lm} = <f, sY_{lm}>.  Exact (to floating precision) for maps
// produced on a matching build_grid grid.
HarmonicCoeffs forward_sht(const SphereMap& map);

// Harmonic-space rotation: (R_rho f)_{lm} = sum_n D^l_{mn}(rho) f_{ln}.
// Preserves the spin number.
HarmonicCoeffs rotate_harmonics(const HarmonicCoeffs& coeffs,
                                const EulerAngles& rho);

// Quadrature of |f|^2 over the grid; equals sum_{lm} |f_{lm}|^2 for
// band-limited input.
double map_energy(const SphereMap& map);

// sum_{lm} |f_{lm}|^2.
double coeff_energy(const HarmonicCoeffs& coeffs);

}  // namespace spinwav
