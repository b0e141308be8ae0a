#include "spinwav/sphere.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"
#include "spinwav/quadrature.hpp"
#include "wigner_engine.hpp"

namespace spinwav {

SphereGrid build_grid(int band_limit) {
  if (band_limit < 1) {
    throw std::invalid_argument("build_grid: band limit must be >= 1");
  }
  GaussLegendreRule rule = gauss_legendre(band_limit);
  SphereGrid grid;
  grid.band_limit = band_limit;
  grid.n_phi = 2 * band_limit - 1;
  grid.thetas.resize(rule.nodes.size());
  grid.weights.resize(rule.nodes.size());
  // x = cos(theta) descending as theta ascends; nodes come back ascending.
  const int n = band_limit;
  for (int i = 0; i < n; ++i) {
    grid.thetas[i] = std::acos(rule.nodes[n - 1 - i]);
    grid.weights[i] = rule.weights[n - 1 - i];
  }
  return grid;
}

HarmonicCoeffs::HarmonicCoeffs(int band_limit, int spin)
    : band_limit_(band_limit),
      spin_(spin),
      values_(static_cast<std::size_t>(band_limit) * band_limit, Complex{}) {
  if (band_limit < 1) {
    throw std::invalid_argument("HarmonicCoeffs: band limit must be >= 1");
  }
  if (std::abs(spin) >= band_limit) {
    throw std::invalid_argument("HarmonicCoeffs: |spin| must be < band limit");
  }
}

SphereMap::SphereMap(SphereGrid grid, int spin)
    : grid_(std::move(grid)),
      spin_(spin),
      samples_(grid_.sample_count(), Complex{}) {}

namespace {

// (-1)^s sqrt((2l+1)/(4pi)); the "sY_{lm} = c_l d^l_{m,-s} e^{im phi}" factor.
double harmonic_prefactor(int l, int spin) {
  const double c = std::sqrt((2.0 * l + 1.0) / kFourPi);
  return (spin % 2 == 0) ? c : -c;
}

void check_grid(const SphereGrid& grid, int band_limit) {
  if (grid.band_limit != band_limit) {
    throw std::invalid_argument("sht: grid band limit does not match coefficients");
  }
  if (grid.n_theta() != band_limit || grid.n_phi < 2 * band_limit - 1) {
    throw std::invalid_argument("sht: grid shape does not match its band limit");
  }
}

}  // namespace

SphereMap inverse_sht(const HarmonicCoeffs& coeffs, const SphereGrid& grid) {
  check_grid(grid, coeffs.band_limit());
  const int L = coeffs.band_limit();
  const int s = coeffs.spin();
  const int nt = grid.n_theta();
  const int np = grid.n_phi;

  detail::BetaTrig bt(grid.thetas);
  detail::WignerWorkspace ws;

  // G[(m + L-1) * nt + t] = sum_l c_l f_{lm} d^l_{m,-s}(theta_t)
  std::vector<Complex> g(static_cast<std::size_t>(2 * L - 1) * nt, Complex{});
  for (int m = -(L - 1); m <= L - 1; ++m) {
    Complex* row = g.data() + static_cast<std::size_t>(m + L - 1) * nt;
    wigner_d_run(bt, m, -s, L - 1, ws, [&](int l, const double* d) {
      const Complex c = coeffs(l, m) * harmonic_prefactor(l, s);
      if (c == Complex{}) return;
      for (int t = 0; t < nt; ++t) row[t] += c * d[t];
    });
  }

  SphereMap map(grid, s);
  detail::Fft1d fft(np, FFTW_BACKWARD);
  Complex* buf = fft.buffer();
  for (int t = 0; t < nt; ++t) {
    for (int p = 0; p < np; ++p) buf[p] = Complex{};
    for (int m = -(L - 1); m <= L - 1; ++m) {
      const int bin = (m % np + np) % np;
      buf[bin] = g[static_cast<std::size_t>(m + L - 1) * nt + t];
    }
    fft.execute();
    for (int p = 0; p < np; ++p) map.at(t, p) = buf[p];
  }
  return map;
}

HarmonicCoeffs forward_sht(const SphereMap& map) {
  const SphereGrid& grid = map.grid();
  const int L = grid.band_limit;
  const int s = map.spin();
  check_grid(grid, L);
  if (std::abs(s) >= L) {
    throw std::invalid_argument("forward_sht: |spin| must be < band limit");
  }
  const int nt = grid.n_theta();
  const int np = grid.n_phi;
  const double dphi = kTwoPi / np;

  // G[(m + L-1) * nt + t] = w_t * dphi * sum_p f(t,p) e^{-im phi_p}
  std::vector<Complex> g(static_cast<std::size_t>(2 * L - 1) * nt, Complex{});
  {
    detail::Fft1d fft(np, FFTW_FORWARD);
    Complex* buf = fft.buffer();
    for (int t = 0; t < nt; ++t) {
      for (int p = 0; p < np; ++p) buf[p] = map(t, p);
      fft.execute();
      const double wt = grid.weights[t] * dphi;
      for (int m = -(L - 1); m <= L - 1; ++m) {
        const int bin = (m % np + np) % np;
        g[static_cast<std::size_t>(m + L - 1) * nt + t] = wt * buf[bin];
      }
    }
  }

  detail::BetaTrig bt(grid.thetas);
  detail::WignerWorkspace ws;
  HarmonicCoeffs coeffs(L, s);
  for (int m = -(L - 1); m <= L - 1; ++m) {
    const Complex* row = g.data() + static_cast<std::size_t>(m + L - 1) * nt;
    wigner_d_run(bt, m, -s, L - 1, ws, [&](int l, const double* d) {
      Complex acc{};
      for (int t = 0; t < nt; ++t) acc += row[t] * d[t];
      coeffs.at(l, m) = acc * harmonic_prefactor(l, s);
    });
  }
  return coeffs;
}

HarmonicCoeffs rotate_harmonics(const HarmonicCoeffs& coeffs,
                                const EulerAngles& rho) {
  const int L = coeffs.band_limit();
  const int s = coeffs.spin();
  HarmonicCoeffs out(L, s);

  const double betas[1] = {rho.beta};
  detail::BetaTrig bt(betas);
  detail::WignerWorkspace ws;

  // (R f)_{lm} = e^{-im alpha} sum_n d^l_{mn}(beta) e^{-in gamma} f_{ln}
  for (int n = -(L - 1); n <= L - 1; ++n) {
    const Complex phase_gamma = std::polar(1.0, -n * rho.gamma);
    std::vector<Complex> weighted(static_cast<std::size_t>(L), Complex{});
    bool any = false;
    for (int l = std::abs(n); l < L; ++l) {
      weighted[l] = coeffs(l, n) * phase_gamma;
      any = any || weighted[l] != Complex{};
    }
    if (!any) continue;
    for (int m = -(L - 1); m <= L - 1; ++m) {
      wigner_d_run(bt, m, n, L - 1, ws, [&](int l, const double* d) {
        out.at(l, m) += weighted[l] * d[0];
      });
    }
  }
  for (int m = -(L - 1); m <= L - 1; ++m) {
    const Complex phase_alpha = std::polar(1.0, -m * rho.alpha);
    for (int l = std::abs(m); l < L; ++l) out.at(l, m) *= phase_alpha;
  }
  // Rotation preserves the spin number; rows below |s| stay zero.
  for (int l = 0; l < std::abs(s); ++l) {
    for (int m = -l; m <= l; ++m) out.at(l, m) = Complex{};
  }
  return out;
}

double map_energy(const SphereMap& map) {
  const SphereGrid& grid = map.grid();
  const double dphi = kTwoPi / grid.n_phi;
  double total = 0.0;
  for (int t = 0; t < grid.n_theta(); ++t) {
    double row = 0.0;
    for (int p = 0; p < grid.n_phi; ++p) row += std::norm(map(t, p));
    total += grid.weights[t] * row;
  }
  return total * dphi;
}

double coeff_energy(const HarmonicCoeffs& coeffs) {
  double total = 0.0;
  for (const Complex& v : coeffs.values()) total += std::norm(v);
  return total;
}

}  // namespace spinwav
