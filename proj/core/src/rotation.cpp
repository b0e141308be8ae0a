#include "spinwav/rotation.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"
#include "spinwav/quadrature.hpp"
#include "wigner_engine.hpp"

namespace spinwav {

RotationGrid build_rotation_grid(int band_limit, int azimuthal_band_limit) {
  if (band_limit < 1) {
    throw std::invalid_argument("build_rotation_grid: band limit must be >= 1");
  }
  if (azimuthal_band_limit < 1) {
    throw std::invalid_argument(
        "build_rotation_grid: azimuthal band limit must be >= 1");
  }
  GaussLegendreRule rule = gauss_legendre(band_limit);
  RotationGrid grid;
  grid.band_limit = band_limit;
  grid.n_alpha = 2 * band_limit - 1;
  grid.n_gamma = 2 * azimuthal_band_limit - 1;
  grid.betas.resize(rule.nodes.size());
  grid.weights.resize(rule.nodes.size());
  for (int i = 0; i < band_limit; ++i) {
    grid.betas[i] = std::acos(rule.nodes[band_limit - 1 - i]);
    grid.weights[i] = rule.weights[band_limit - 1 - i];
  }
  return grid;
}

WignerCoeffs::WignerCoeffs(int band_limit, int azimuthal_band_limit)
    : band_limit_(band_limit),
      n_band_(azimuthal_band_limit),
      values_(static_cast<std::size_t>(2 * azimuthal_band_limit - 1) *
                  band_limit * band_limit,
              Complex{}) {
  if (band_limit < 1 || azimuthal_band_limit < 1) {
    throw std::invalid_argument("WignerCoeffs: band limits must be >= 1");
  }
}

RotationMap::RotationMap(RotationGrid grid)
    : grid_(std::move(grid)), samples_(grid_.sample_count(), Complex{}) {}

namespace {

void check_rotation_grid(const RotationGrid& grid) {
  const int L = grid.band_limit;
  if (grid.n_beta() != L || grid.n_alpha != 2 * L - 1 || grid.n_gamma < 1 ||
      grid.n_gamma % 2 == 0) {
    throw std::invalid_argument("rotation grid shape does not match its band limit");
  }
}

}  // namespace

RotationMap inverse_wigner(const WignerCoeffs& coeffs, const RotationGrid& grid) {
  check_rotation_grid(grid);
  const int L = coeffs.band_limit();
  const int N = coeffs.azimuthal_band_limit();
  if (grid.band_limit != L) {
    throw std::invalid_argument("inverse_wigner: grid band limit mismatch");
  }
  if (grid.n_gamma < 2 * std::min(N, L) - 1) {
    throw std::invalid_argument("inverse_wigner: gamma samples below band limit");
  }
  const int nb = grid.n_beta();
  const int na = grid.n_alpha;
  const int ng = grid.n_gamma;
  const int n_max = std::min(N, L) - 1;

  detail::BetaTrig bt(grid.betas);
  detail::WignerWorkspace ws;

  // G[((m, n) row)][b] = sum_l (2l+1)/(8 pi^2) f^l_{mn} d^l_{mn}(beta_b)
  const std::size_t rows = static_cast<std::size_t>(2 * L - 1) * (2 * n_max + 1);
  std::vector<Complex> g(rows * nb, Complex{});
  for (int n = -n_max; n <= n_max; ++n) {
    for (int m = -(L - 1); m <= L - 1; ++m) {
      Complex* row =
          g.data() + (static_cast<std::size_t>(n + n_max) * (2 * L - 1) + m + L - 1) * nb;
      wigner_d_run(bt, m, n, L - 1, ws, [&](int l, const double* d) {
        const Complex c = coeffs(l, m, n) * ((2.0 * l + 1.0) / kEightPiSq);
        if (c == Complex{}) return;
        for (int b = 0; b < nb; ++b) row[b] += c * d[b];
      });
    }
  }

  RotationMap map(grid);
  detail::Fft2d fft(na, ng, FFTW_BACKWARD);
  Complex* buf = fft.buffer();
  const std::size_t plane = static_cast<std::size_t>(na) * ng;
  for (int b = 0; b < nb; ++b) {
    for (std::size_t i = 0; i < plane; ++i) buf[i] = Complex{};
    for (int m = -(L - 1); m <= L - 1; ++m) {
      const int abin = (m % na + na) % na;
      for (int n = -n_max; n <= n_max; ++n) {
        const int gbin = (n % ng + ng) % ng;
        buf[static_cast<std::size_t>(abin) * ng + gbin] =
            g[(static_cast<std::size_t>(n + n_max) * (2 * L - 1) + m + L - 1) * nb + b];
      }
    }
    fft.execute();
    Complex* out = map.samples().data() + static_cast<std::size_t>(b) * plane;
    for (std::size_t i = 0; i < plane; ++i) out[i] = buf[i];
  }
  return map;
}

WignerCoeffs forward_wigner(const RotationMap& map) {
  const RotationGrid& grid = map.grid();
  check_rotation_grid(grid);
  const int L = grid.band_limit;
  const int N = grid.azimuthal_band_limit();
  const int nb = grid.n_beta();
  const int na = grid.n_alpha;
  const int ng = grid.n_gamma;
  const int n_max = std::min(N, L) - 1;
  const double dad = kTwoPi / na * (kTwoPi / ng);

  // F[((m, n) row)][b] = w_b dalpha dgamma sum_{a,g} f e^{-im alpha} e^{-in gamma}
  const std::size_t rows = static_cast<std::size_t>(2 * L - 1) * (2 * n_max + 1);
  std::vector<Complex> f(rows * nb, Complex{});
  {
    detail::Fft2d fft(na, ng, FFTW_FORWARD);
    Complex* buf = fft.buffer();
    const std::size_t plane = static_cast<std::size_t>(na) * ng;
    for (int b = 0; b < nb; ++b) {
      const Complex* in = map.samples().data() + static_cast<std::size_t>(b) * plane;
      for (std::size_t i = 0; i < plane; ++i) buf[i] = in[i];
      fft.execute();
      const double wb = grid.weights[b] * dad;
      for (int m = -(L - 1); m <= L - 1; ++m) {
        const int abin = (m % na + na) % na;
        for (int n = -n_max; n <= n_max; ++n) {
          const int gbin = (n % ng + ng) % ng;
          f[(static_cast<std::size_t>(n + n_max) * (2 * L - 1) + m + L - 1) * nb + b] =
              wb * buf[static_cast<std::size_t>(abin) * ng + gbin];
        }
      }
    }
  }

  detail::BetaTrig bt(grid.betas);
  detail::WignerWorkspace ws;
  WignerCoeffs coeffs(L, N);
  for (int n = -n_max; n <= n_max; ++n) {
    for (int m = -(L - 1); m <= L - 1; ++m) {
      const Complex* row =
          f.data() + (static_cast<std::size_t>(n + n_max) * (2 * L - 1) + m + L - 1) * nb;
      wigner_d_run(bt, m, n, L - 1, ws, [&](int l, const double* d) {
        Complex acc{};
        for (int b = 0; b < nb; ++b) acc += row[b] * d[b];
        coeffs.at(l, m, n) = acc;
      });
    }
  }
  return coeffs;
}

double map_energy(const RotationMap& map) {
  const RotationGrid& grid = map.grid();
  const double dad = kTwoPi / grid.n_alpha * (kTwoPi / grid.n_gamma);
  const std::size_t plane =
      static_cast<std::size_t>(grid.n_alpha) * grid.n_gamma;
  double total = 0.0;
  for (int b = 0; b < grid.n_beta(); ++b) {
    const Complex* in = map.samples().data() + static_cast<std::size_t>(b) * plane;
    double acc = 0.0;
    for (std::size_t i = 0; i < plane; ++i) acc += std::norm(in[i]);
    total += grid.weights[b] * acc;
  }
  return total * dad;
}

double coeff_energy(const WignerCoeffs& coeffs) {
  const int L = coeffs.band_limit();
  const int n_max = std::min(coeffs.azimuthal_band_limit(), L) - 1;
  double total = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    for (int l = std::abs(n); l < L; ++l) {
      double acc = 0.0;
      for (int m = -l; m <= l; ++m) acc += std::norm(coeffs(l, m, n));
      total += acc * (2.0 * l + 1.0) / kEightPiSq;
    }
  }
  return total;
}

}  // namespace spinwav
