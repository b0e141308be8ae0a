#pragma once

#include <cstddef>
#include <vector>

#include "spinwav/common.hpp"

namespace spinwav {

// Parameters of one wavelet system.
struct WaveletParams {
  int band_limit = 0;     // L
  double alpha = 2.0;     // dilation, > 1
  int j_min = 0;          // minimum scale J0
  int n_directions = 1;   // azimuthal band-limit N
  int spin = 0;
};

// J = ceil(log_alpha(L - 1)), the scale at which wavelets reach the
// band-limit.
int max_scale(double alpha, int band_limit);

// Compactly supported Schwartz bump: exp(-1/(1-t^2)) on (-1,1), else 0.
double schwartz_s(double t);

// Smoothly decreasing transition: 1 for t <= 1/alpha, 0 for t >= 1.
// Ratio of integrals of s_alpha^2(u)/u, evaluated by adaptive quadrature
// to 1e-14 absolute tolerance.
double k_alpha(double t, double alpha);

// Harmonic kernel kappa^{(j)}(l) = kappa_alpha(alpha^{-j} l) with
// kappa_alpha(t) = sqrt(k_alpha(t/alpha) - k_alpha(t)).  Compact support
// l in [floor(alpha^{j-1}), ceil(alpha^{j+1})], peak of unity at alpha^j.
double kernel(int j, int l, const WaveletParams& params);

// Per-scale kernel values on the l-lattice plus the scaling kernel
// sqrt(k_alpha(alpha^{-J0} l)).  Built once and reused by every transform.
struct KernelTable {
  int band_limit = 0;
  double alpha = 0.0;
  int j_min = 0;
  int j_max = 0;
  std::vector<std::vector<double>> kappa;  // [j - j_min][l]
  std::vector<double> scaling;             // [l]

  int scale_count() const { return j_max - j_min + 1; }
};

KernelTable build_kernel_table(const WaveletParams& params);

// Directionality component: harmonic coefficients controlling the azimuthal
// behaviour of the wavelets.  Nonzero only for |m| < N; each populated row
// satisfies sum_m |zeta_{lm}|^2 = 1.  Real when N-1 is even, purely
// imaginary when N-1 is odd.
class Directionality {
 public:
  Directionality(int band_limit, int n_directions);

  int band_limit() const { return band_limit_; }
  int n_directions() const { return n_directions_; }

  Complex operator()(int l, int m) const {
    if (m <= -n_directions_ || m >= n_directions_) return Complex{};
    return values_[index(l, m)];
  }
  Complex& at(int l, int m) { return values_[index(l, m)]; }

 private:
  std::size_t index(int l, int m) const {
    return static_cast<std::size_t>(l) * (2 * n_directions_ - 1) + m +
           n_directions_ - 1;
  }
  int band_limit_;
  int n_directions_;
  std::vector<Complex> values_;
};

Directionality directionality(const WaveletParams& params);

// The wavelet system {psi^{(j)}, Phi}: factorised harmonic coefficients
// psi^{(j)}_{ln} = sqrt((2l+1)/(8 pi^2)) kappa^{(j)}(l) zeta_{ln} and the
// axisymmetric scaling coefficients Phi_{l0}.
class WaveletFamily {
 public:
  static WaveletFamily from_components(
      const WaveletParams& params,
      std::vector<std::vector<Complex>> psi,  // [j - j_min][l * (2N-1) + n + N-1]
      std::vector<double> phi,                // Phi_{l0}, length L
      KernelTable kernels);

  const WaveletParams& params() const { return params_; }
  int j_min() const { return params_.j_min; }
  int j_max() const { return j_max_; }
  int scale_count() const { return j_max_ - params_.j_min + 1; }

  // psi^{(j)}_{ln}; zero outside |n| < N.
  Complex psi(int j, int l, int n) const {
    if (n <= -params_.n_directions || n >= params_.n_directions) return Complex{};
    return psi_[static_cast<std::size_t>(j - params_.j_min)]
               [static_cast<std::size_t>(l) * (2 * params_.n_directions - 1) +
                n + params_.n_directions - 1];
  }
  // Phi_{l0} (real by construction).
  double phi(int l) const { return phi_[static_cast<std::size_t>(l)]; }

  const KernelTable& kernels() const { return kernels_; }
  const std::vector<Complex>& psi_table(int j) const {
    return psi_[static_cast<std::size_t>(j - params_.j_min)];
  }

  // Band limit of scale j under multiresolution: min(ceil(alpha^{j+1}), L).
  int scale_band_limit(int j) const;
  // Band limit of the scaling coefficients: min(ceil(alpha^{J0}), L).
  int scaling_band_limit() const;

 private:
  WaveletFamily(const WaveletParams& params, int j_max);

  WaveletParams params_;
  int j_max_;
  std::vector<std::vector<Complex>> psi_;
  std::vector<double> phi_;
  KernelTable kernels_;
};

// Validates params, builds kernels and directionality, and assembles the
// family.  The result satisfies the resolution-of-the-identity condition to
// quadrature accuracy.
WaveletFamily build_family(const WaveletParams& params);

// max over l of |4pi/(2l+1) |Phi_{l0}|^2 + 8pi^2/(2l+1) sum_{jn}
// |psi^{(j)}_{ln}|^2 - 1|.
double check_admissibility(const WaveletFamily& family);

// Same family with every wavelet rotated in orientation by gamma
// (psi_{ln} -> e^{-in gamma} psi_{ln}).
WaveletFamily rotate_family(const WaveletFamily& family, double gamma);

}  // namespace spinwav
