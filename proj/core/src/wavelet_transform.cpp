#include "spinwav/wavelet_transform.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

namespace spinwav {

namespace {

void check_signal(const HarmonicCoeffs& f, const WaveletFamily& family) {
  if (f.band_limit() != family.params().band_limit) {
    throw std::invalid_argument("wavelet transform: band limit mismatch");
  }
  if (f.spin() != family.params().spin) {
    throw std::invalid_argument("wavelet transform: spin mismatch");
  }
}

WaveletCoefficients analyze_impl(const HarmonicCoeffs& f,
                                 const WaveletFamily& family, bool multires) {
  check_signal(f, family);
  const WaveletParams& p = family.params();
  const int N = p.n_directions;

  std::vector<RotationMap> maps;
  maps.reserve(static_cast<std::size_t>(family.scale_count()));
  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    const int lj = multires ? family.scale_band_limit(j) : p.band_limit;
    const int nj = std::min(N, lj);
    WignerCoeffs wc(lj, nj);
    for (int n = -(nj - 1); n <= nj - 1; ++n) {
      for (int l = std::abs(n); l < lj; ++l) {
        const Complex psi_conj = std::conj(family.psi(j, l, n));
        if (psi_conj == Complex{}) continue;
        const Complex c = kEightPiSq / (2.0 * l + 1.0) * psi_conj;
        for (int m = -l; m <= l; ++m) {
          wc.at(l, m, n) = c * f(l, m);
        }
      }
    }
    maps.push_back(inverse_wigner(wc, build_rotation_grid(lj, N)));
  }

  const int ls = multires ? family.scaling_band_limit() : p.band_limit;
  HarmonicCoeffs sc(ls, 0);
  for (int l = 0; l < ls; ++l) {
    const double c = std::sqrt(kFourPi / (2.0 * l + 1.0)) * family.phi(l);
    if (c == 0.0) continue;
    for (int m = -l; m <= l; ++m) sc.at(l, m) = c * f(l, m);
  }
  SphereMap scaling = inverse_sht(sc, build_grid(ls));

  return WaveletCoefficients{p, multires, std::move(maps), std::move(scaling)};
}

}  // namespace

WaveletCoefficients analyze(const HarmonicCoeffs& f, const WaveletFamily& family) {
  return analyze_impl(f, family, false);
}

WaveletCoefficients analyze_multires(const HarmonicCoeffs& f,
                                     const WaveletFamily& family) {
  return analyze_impl(f, family, true);
}

HarmonicCoeffs synthesize(const WaveletCoefficients& w, const WaveletFamily& family) {
  const WaveletParams& p = family.params();
  if (w.params.band_limit != p.band_limit || w.params.n_directions != p.n_directions ||
      w.params.spin != p.spin || w.params.j_min != p.j_min) {
    throw std::invalid_argument("synthesize: coefficient/family parameter mismatch");
  }
  if (w.scales.size() != static_cast<std::size_t>(family.scale_count())) {
    throw std::invalid_argument("synthesize: wrong number of scales");
  }

  HarmonicCoeffs out(p.band_limit, p.spin);
  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    const RotationMap& map = w.scale(j);
    if (map.grid().n_gamma != 2 * p.n_directions - 1) {
      throw std::invalid_argument("synthesize: gamma dimension mismatch");
    }
    WignerCoeffs wc = forward_wigner(map);
    const int lj = wc.band_limit();
    const int nj = std::min(wc.azimuthal_band_limit(), lj);
    for (int n = -(nj - 1); n <= nj - 1; ++n) {
      for (int l = std::abs(n); l < std::min(lj, p.band_limit); ++l) {
        const Complex psi = family.psi(j, l, n);
        if (psi == Complex{}) continue;
        for (int m = -l; m <= l; ++m) out.at(l, m) += wc(l, m, n) * psi;
      }
    }
  }

  const HarmonicCoeffs sc = forward_sht(w.scaling);
  const int ls = std::min(sc.band_limit(), p.band_limit);
  for (int l = 0; l < ls; ++l) {
    const double c = std::sqrt(kFourPi / (2.0 * l + 1.0)) * family.phi(l);
    if (c == 0.0) continue;
    for (int m = -l; m <= l; ++m) out.at(l, m) += c * sc(l, m);
  }

  for (int l = 0; l < std::abs(p.spin); ++l) {
    for (int m = -l; m <= l; ++m) out.at(l, m) = Complex{};
  }
  return out;
}

SteeringWeights::SteeringWeights(int n) : n_directions(n) {
  if (n < 1) throw std::invalid_argument("SteeringWeights: N must be >= 1");
  angles.resize(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) angles[static_cast<std::size_t>(g)] = g * kPi / n;
}

double SteeringWeights::z(double gamma) const {
  // Frequencies m in (-N, N) with m = N - 1 (mod 2); there are exactly N.
  const int N = n_directions;
  double acc = ((N - 1) % 2 == 0) ? 1.0 : 0.0;  // m = 0 term when present
  for (int m = (N - 1) % 2 == 0 ? 2 : 1; m <= N - 1; m += 2) {
    acc += 2.0 * std::cos(m * gamma);
  }
  return acc / N;
}

namespace {

SphereGrid slice_grid(const RotationGrid& rg) {
  SphereGrid grid;
  grid.band_limit = rg.band_limit;
  grid.thetas = rg.betas;
  grid.weights = rg.weights;
  grid.n_phi = rg.n_alpha;
  return grid;
}

// Gamma Fourier modes c_n(a, b) with f(a,b,gamma) = sum_n c_n e^{i n gamma}.
std::vector<Complex> gamma_modes(const RotationMap& map) {
  const RotationGrid& g = map.grid();
  const int ng = g.n_gamma;
  const int n_max = (ng - 1) / 2;
  std::vector<Complex> modes(map.samples().size());
  const std::size_t planes = map.samples().size() / static_cast<std::size_t>(ng);
  for (std::size_t i = 0; i < planes; ++i) {
    const Complex* in = map.samples().data() + i * ng;
    Complex* out = modes.data() + i * ng;
    for (int n = -n_max; n <= n_max; ++n) {
      Complex acc{};
      for (int k = 0; k < ng; ++k) {
        acc += in[k] * std::polar(1.0, -n * kTwoPi * k / ng);
      }
      out[n + n_max] = acc / static_cast<double>(ng);
    }
  }
  return modes;
}

SphereMap evaluate_at_orientations(const WaveletCoefficients& w, int j,
                                   std::span<const double> orientation_weights,
                                   std::span<const double> orientations) {
  const RotationMap& map = w.scale(j);
  const RotationGrid& rg = map.grid();
  const int ng = rg.n_gamma;
  const int n_max = (ng - 1) / 2;

  // Combined per-mode weight sum_g weight_g e^{i n gamma_g}.
  std::vector<Complex> mode_weight(static_cast<std::size_t>(ng), Complex{});
  for (std::size_t g = 0; g < orientations.size(); ++g) {
    for (int n = -n_max; n <= n_max; ++n) {
      mode_weight[static_cast<std::size_t>(n + n_max)] +=
          orientation_weights[g] * std::polar(1.0, n * orientations[g]);
    }
  }

  const std::vector<Complex> modes = gamma_modes(map);
  SphereMap out(slice_grid(rg), 0);
  for (int b = 0; b < rg.n_beta(); ++b) {
    for (int a = 0; a < rg.n_alpha; ++a) {
      const Complex* c = modes.data() + map.index(a, b, 0);
      Complex acc{};
      for (int i = 0; i < ng; ++i) acc += c[i] * mode_weight[static_cast<std::size_t>(i)];
      out.at(b, a) = acc;
    }
  }
  return out;
}

void check_scale(const WaveletCoefficients& w, int j) {
  if (j < w.params.j_min ||
      j - w.params.j_min >= static_cast<int>(w.scales.size())) {
    throw std::invalid_argument("steer: scale out of range");
  }
}

}  // namespace

SphereMap orientation_slice(const WaveletCoefficients& w, int j, int g) {
  check_scale(w, j);
  const SteeringWeights sw(w.params.n_directions);
  if (g < 0 || g >= sw.n_directions) {
    throw std::invalid_argument("orientation_slice: basis index out of range");
  }
  const double weight[1] = {1.0};
  const double angle[1] = {sw.angles[static_cast<std::size_t>(g)]};
  return evaluate_at_orientations(w, j, weight, angle);
}

SphereMap steer(const WaveletCoefficients& w, int j, double gamma) {
  check_scale(w, j);
  const SteeringWeights sw(w.params.n_directions);
  std::vector<double> weights(sw.angles.size());
  for (std::size_t g = 0; g < sw.angles.size(); ++g) {
    weights[g] = sw.z(gamma - sw.angles[g]);
  }
  return evaluate_at_orientations(w, j, weights, sw.angles);
}

double total_energy(const WaveletCoefficients& w) {
  double total = map_energy(w.scaling);
  for (const RotationMap& map : w.scales) total += map_energy(map);
  return total;
}

}  // namespace spinwav
