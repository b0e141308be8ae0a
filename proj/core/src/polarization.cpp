#include "spinwav/polarization.hpp"

#include <cmath>
#include <stdexcept>

namespace spinwav {

namespace {

void check_pair(const HarmonicCoeffs& plus, const HarmonicCoeffs& minus) {
  if (plus.band_limit() != minus.band_limit()) {
    throw std::invalid_argument("qu pair: band limit mismatch");
  }
  if (plus.spin() != 2 || minus.spin() != -2) {
    throw std::invalid_argument("qu pair: expected spins +2 and -2");
  }
}

// sqrt((l+2)!/(l-2)!) = sqrt((l+2)(l+1) l (l-1)); zero for l < 2.
double tilde_factor(int l) {
  if (l < 2) return 0.0;
  return std::sqrt(static_cast<double>(l + 2) * (l + 1) * l * (l - 1));
}

}  // namespace

EBPair qu_to_eb(const StokesQU& qu) {
  check_pair(qu.plus, qu.minus);
  const int L = qu.plus.band_limit();
  EBPair eb{HarmonicCoeffs(L, 0), HarmonicCoeffs(L, 0), false};
  for (int l = 2; l < L; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex p = qu.plus(l, m);
      const Complex q = qu.minus(l, m);
      eb.e.at(l, m) = -0.5 * (p + q);
      eb.b.at(l, m) = Complex{0.0, 0.5} * (p - q);
    }
  }
  return eb;
}

StokesQU eb_to_qu(const EBPair& eb) {
  if (eb.derivative_weighted) {
    return eb_to_qu(to_physical(eb));
  }
  const int L = eb.e.band_limit();
  if (eb.b.band_limit() != L) {
    throw std::invalid_argument("eb pair: band limit mismatch");
  }
  StokesQU qu{HarmonicCoeffs(L, 2), HarmonicCoeffs(L, -2)};
  for (int l = 2; l < L; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex ib = Complex{0.0, 1.0} * eb.b(l, m);
      qu.plus.at(l, m) = -(eb.e(l, m) + ib);
      qu.minus.at(l, m) = -(eb.e(l, m) - ib);
    }
  }
  return qu;
}

EBPair to_derivative_weighted(const EBPair& eb) {
  if (eb.derivative_weighted) return eb;
  EBPair out{eb.e, eb.b, true};
  const int L = eb.e.band_limit();
  for (int l = 0; l < L; ++l) {
    const double f = tilde_factor(l);
    for (int m = -l; m <= l; ++m) {
      out.e.at(l, m) *= f;
      out.b.at(l, m) *= f;
    }
  }
  return out;
}

EBPair to_physical(const EBPair& eb) {
  if (!eb.derivative_weighted) return eb;
  EBPair out{eb.e, eb.b, false};
  const int L = eb.e.band_limit();
  for (int l = 0; l < L; ++l) {
    const double f = tilde_factor(l);
    const double inv = (f == 0.0) ? 0.0 : 1.0 / f;
    for (int m = -l; m <= l; ++m) {
      out.e.at(l, m) *= inv;
      out.b.at(l, m) *= inv;
    }
  }
  return out;
}

HarmonicCoeffs spin_lower_harmonic(const HarmonicCoeffs& coeffs, int times) {
  if (times < 0) {
    throw std::invalid_argument("spin_lower_harmonic: times must be >= 0");
  }
  const int L = coeffs.band_limit();
  const int target = coeffs.spin() - times;
  if (std::abs(target) >= L) {
    throw std::invalid_argument("spin_lower_harmonic: target spin out of range");
  }
  HarmonicCoeffs out(L, target);
  for (int l = std::abs(target); l < L; ++l) {
    double factor = 1.0;
    bool valid = l >= std::abs(coeffs.spin());
    int s = coeffs.spin();
    for (int k = 0; k < times && valid; ++k) {
      const double prod = static_cast<double>(l + s) * (l - s + 1);
      if (prod < 0.0) {
        valid = false;
        break;
      }
      factor *= -std::sqrt(prod);
      --s;
      if (std::abs(s) > l) valid = false;
    }
    if (!valid) continue;
    for (int m = -l; m <= l; ++m) out.at(l, m) = factor * coeffs(l, m);
  }
  return out;
}

WaveletFamily lowered_scalar_family(const WaveletFamily& family) {
  WaveletParams p = family.params();
  if (p.spin != 2) {
    throw std::invalid_argument("lowered_scalar_family: family must have spin 2");
  }
  p.spin = 0;
  const int width = 2 * p.n_directions - 1;
  std::vector<std::vector<Complex>> psi;
  psi.reserve(static_cast<std::size_t>(family.scale_count()));
  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    std::vector<Complex> table = family.psi_table(j);
    for (int l = 0; l < p.band_limit; ++l) {
      const double f = tilde_factor(l);
      const double inv = (f == 0.0) ? 0.0 : 1.0 / f;
      for (int n = 0; n < width; ++n) {
        table[static_cast<std::size_t>(l) * width + n] *= inv;
      }
    }
    psi.push_back(std::move(table));
  }
  std::vector<double> phi(static_cast<std::size_t>(p.band_limit), 0.0);
  for (int l = 2; l < p.band_limit; ++l) {
    phi[static_cast<std::size_t>(l)] = family.phi(l) / tilde_factor(l);
  }
  return WaveletFamily::from_components(p, std::move(psi), std::move(phi),
                                        family.kernels());
}

EbWaveletMaps eb_wavelet_connection(const StokesQU& qu, const WaveletFamily& family) {
  check_pair(qu.plus, qu.minus);
  if (family.params().spin != 2) {
    throw std::invalid_argument("eb_wavelet_connection: family must have spin 2");
  }
  const WaveletCoefficients w = analyze(qu.plus, family);
  EbWaveletMaps out;
  out.e_tilde.reserve(w.scales.size());
  out.b_tilde.reserve(w.scales.size());
  for (const RotationMap& map : w.scales) {
    RotationMap e(map.grid());
    RotationMap b(map.grid());
    for (std::size_t i = 0; i < map.samples().size(); ++i) {
      e.samples()[i] = Complex{-map.samples()[i].real(), 0.0};
      b.samples()[i] = Complex{-map.samples()[i].imag(), 0.0};
    }
    out.e_tilde.push_back(std::move(e));
    out.b_tilde.push_back(std::move(b));
  }
  return out;
}

}  // namespace spinwav
