#include "spinwav/wavelet_family.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace spinwav {

namespace {

// Integer ceil of alpha^e with a guard against pow() landing a few ulp off
// an exact integer.
int iceil_pow(double alpha, int e) {
  return static_cast<int>(std::ceil(std::pow(alpha, e) - 1e-9));
}

// 15-point Kronrod / 7-point Gauss pair on [-1, 1].
constexpr double kKronrodNodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
constexpr double kKronrodWeights[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr double kGaussWeights[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

template <typename F>
void gk15(const F& f, double a, double b, double& integral, double& err) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double v = f(c + h * kKronrodNodes[i]);
    k += kKronrodWeights[i] * v;
    if (i % 2 == 1) g += kGaussWeights[i / 2] * v;
  }
  integral = k * h;
  err = std::fabs((k - g) * h);
}

template <typename F>
double adaptive_quadrature(const F& f, double a, double b, double tol,
                           int depth = 0) {
  double integral, err;
  gk15(f, a, b, integral, err);
  if (err <= tol || depth >= 48) return integral;
  const double c = 0.5 * (a + b);
  return adaptive_quadrature(f, a, c, 0.5 * tol, depth + 1) +
         adaptive_quadrature(f, c, b, 0.5 * tol, depth + 1);
}

double s_alpha_sq_over_t(double t, double alpha) {
  const double inner = 2.0 * alpha / (alpha - 1.0) * (t - 1.0 / alpha) - 1.0;
  const double s = schwartz_s(inner);
  return s * s / t;
}

double k_alpha_normaliser(double alpha) {
  static std::mutex mutex;
  static std::map<double, double> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(alpha);
  if (it != cache.end()) return it->second;
  const double value = adaptive_quadrature(
      [alpha](double u) { return s_alpha_sq_over_t(u, alpha); }, 1.0 / alpha,
      1.0, 1e-15);
  cache.emplace(alpha, value);
  return value;
}

void validate(const WaveletParams& p) {
  if (p.band_limit < 1) {
    throw std::invalid_argument("wavelet params: band limit must be >= 1");
  }
  if (!(p.alpha > 1.0)) {
    throw std::invalid_argument("wavelet params: alpha must be > 1");
  }
  if (p.n_directions < 1 || p.n_directions > p.band_limit) {
    throw std::invalid_argument("wavelet params: need 1 <= N <= L");
  }
  if (std::abs(p.spin) >= p.band_limit) {
    throw std::invalid_argument("wavelet params: |spin| must be < L");
  }
  const int j_max = max_scale(p.alpha, p.band_limit);
  if (p.j_min < 0 || p.j_min > j_max) {
    throw std::invalid_argument("wavelet params: need 0 <= J0 <= J");
  }
}

}  // namespace

int max_scale(double alpha, int band_limit) {
  if (band_limit <= 2) return 0;
  const double x = std::log(static_cast<double>(band_limit - 1)) / std::log(alpha);
  return static_cast<int>(std::ceil(x - 1e-9));
}

double schwartz_s(double t) {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

double k_alpha(double t, double alpha) {
  if (!(alpha > 1.0)) {
    throw std::invalid_argument("k_alpha: alpha must be > 1");
  }
  if (t <= 1.0 / alpha) return 1.0;
  if (t >= 1.0) return 0.0;
  const double numer = adaptive_quadrature(
      [alpha](double u) { return s_alpha_sq_over_t(u, alpha); }, t, 1.0, 1e-15);
  return numer / k_alpha_normaliser(alpha);
}

double kernel(int j, int l, const WaveletParams& params) {
  validate(params);
  const int j_max = max_scale(params.alpha, params.band_limit);
  if (j < params.j_min || j > j_max) {
    throw std::invalid_argument("kernel: scale out of range");
  }
  if (l < 0 || l >= params.band_limit) {
    throw std::invalid_argument("kernel: l out of range");
  }
  const double t = std::pow(params.alpha, -j) * l;
  const double diff = k_alpha(t / params.alpha, params.alpha) -
                      k_alpha(t, params.alpha);
  return diff > 0.0 ? std::sqrt(diff) : 0.0;
}

KernelTable build_kernel_table(const WaveletParams& params) {
  validate(params);
  KernelTable table;
  table.band_limit = params.band_limit;
  table.alpha = params.alpha;
  table.j_min = params.j_min;
  table.j_max = max_scale(params.alpha, params.band_limit);

  // k_alpha values are reused across scales; cache on the evaluation lattice.
  std::map<double, double> cache;
  auto k = [&](double t) {
    if (t <= 1.0 / params.alpha) return 1.0;
    if (t >= 1.0) return 0.0;
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    const double v = k_alpha(t, params.alpha);
    cache.emplace(t, v);
    return v;
  };

  const int L = params.band_limit;
  table.kappa.resize(static_cast<std::size_t>(table.scale_count()));
  for (int j = table.j_min; j <= table.j_max; ++j) {
    std::vector<double>& row = table.kappa[static_cast<std::size_t>(j - table.j_min)];
    row.resize(static_cast<std::size_t>(L));
    const double inv = std::pow(params.alpha, -j);
    for (int l = 0; l < L; ++l) {
      const double t = inv * l;
      const double diff = k(t / params.alpha) - k(t);
      row[static_cast<std::size_t>(l)] = diff > 0.0 ? std::sqrt(diff) : 0.0;
    }
  }
  table.scaling.resize(static_cast<std::size_t>(L));
  const double inv0 = std::pow(params.alpha, -params.j_min);
  for (int l = 0; l < L; ++l) {
    table.scaling[static_cast<std::size_t>(l)] = std::sqrt(k(inv0 * l));
  }
  return table;
}

Directionality::Directionality(int band_limit, int n_directions)
    : band_limit_(band_limit),
      n_directions_(n_directions),
      values_(static_cast<std::size_t>(band_limit) * (2 * n_directions - 1),
              Complex{}) {}

Directionality directionality(const WaveletParams& params) {
  validate(params);
  const int L = params.band_limit;
  const int N = params.n_directions;
  Directionality zeta(L, N);

  // eta: global phase by parity of N-1; upsilon kills m of the wrong parity;
  // p caps the row width at low l.
  const Complex eta = (N - 1) % 2 == 0 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
  for (int l = 0; l < L; ++l) {
    const int parity_drop = (((N + l) % 2) == 0) ? 1 : 0;
    const int p = std::min(N - 1, l - parity_drop);
    if (p < 0) continue;
    for (int m = -p; m <= p; ++m) {
      if (((N + m) % 2 + 2) % 2 == 0) continue;  // upsilon = 0
      if ((p - m) % 2 != 0) continue;
      const double log_b = std::lgamma(p + 1.0) -
                           std::lgamma((p - m) / 2 + 1.0) -
                           std::lgamma((p + m) / 2 + 1.0);
      const double mag = std::sqrt(std::exp(log_b - p * std::numbers::ln2));
      zeta.at(l, m) = eta * mag;
    }
  }
  return zeta;
}

WaveletFamily::WaveletFamily(const WaveletParams& params, int j_max)
    : params_(params), j_max_(j_max) {}

WaveletFamily WaveletFamily::from_components(
    const WaveletParams& params, std::vector<std::vector<Complex>> psi,
    std::vector<double> phi, KernelTable kernels) {
  validate(params);
  WaveletFamily family(params, max_scale(params.alpha, params.band_limit));
  const std::size_t expected =
      static_cast<std::size_t>(params.band_limit) * (2 * params.n_directions - 1);
  if (psi.size() != static_cast<std::size_t>(family.scale_count())) {
    throw std::invalid_argument("WaveletFamily: wrong number of scales");
  }
  for (const auto& table : psi) {
    if (table.size() != expected) {
      throw std::invalid_argument("WaveletFamily: wrong psi table size");
    }
  }
  if (phi.size() != static_cast<std::size_t>(params.band_limit)) {
    throw std::invalid_argument("WaveletFamily: wrong phi size");
  }
  family.psi_ = std::move(psi);
  family.phi_ = std::move(phi);
  family.kernels_ = std::move(kernels);
  return family;
}

int WaveletFamily::scale_band_limit(int j) const {
  return std::min(params_.band_limit, iceil_pow(params_.alpha, j + 1));
}

int WaveletFamily::scaling_band_limit() const {
  return std::min(params_.band_limit, iceil_pow(params_.alpha, params_.j_min));
}

WaveletFamily build_family(const WaveletParams& params) {
  validate(params);
  KernelTable kernels = build_kernel_table(params);
  Directionality zeta = directionality(params);

  const int L = params.band_limit;
  const int N = params.n_directions;
  const int width = 2 * N - 1;
  std::vector<std::vector<Complex>> psi(
      static_cast<std::size_t>(kernels.scale_count()));
  for (int j = kernels.j_min; j <= kernels.j_max; ++j) {
    std::vector<Complex>& table = psi[static_cast<std::size_t>(j - kernels.j_min)];
    table.assign(static_cast<std::size_t>(L) * width, Complex{});
    const std::vector<double>& kappa =
        kernels.kappa[static_cast<std::size_t>(j - kernels.j_min)];
    for (int l = 0; l < L; ++l) {
      const double norm = std::sqrt((2.0 * l + 1.0) / kEightPiSq) *
                          kappa[static_cast<std::size_t>(l)];
      if (norm == 0.0) continue;
      for (int n = -(N - 1); n <= N - 1; ++n) {
        table[static_cast<std::size_t>(l) * width + n + N - 1] =
            norm * zeta(l, n);
      }
    }
  }

  std::vector<double> phi(static_cast<std::size_t>(L));
  for (int l = 0; l < L; ++l) {
    phi[static_cast<std::size_t>(l)] =
        std::sqrt((2.0 * l + 1.0) / kFourPi) *
        kernels.scaling[static_cast<std::size_t>(l)];
  }
  return WaveletFamily::from_components(params, std::move(psi), std::move(phi),
                                        std::move(kernels));
}

double check_admissibility(const WaveletFamily& family) {
  const WaveletParams& p = family.params();
  double worst = 0.0;
  for (int l = 0; l < p.band_limit; ++l) {
    const double phi = family.phi(l);
    double total = kFourPi / (2.0 * l + 1.0) * phi * phi;
    for (int j = family.j_min(); j <= family.j_max(); ++j) {
      double row = 0.0;
      for (int n = -(p.n_directions - 1); n <= p.n_directions - 1; ++n) {
        row += std::norm(family.psi(j, l, n));
      }
      total += kEightPiSq / (2.0 * l + 1.0) * row;
    }
    worst = std::max(worst, std::fabs(total - 1.0));
  }
  return worst;
}

WaveletFamily rotate_family(const WaveletFamily& family, double gamma) {
  const WaveletParams& p = family.params();
  const int width = 2 * p.n_directions - 1;
  std::vector<std::vector<Complex>> psi;
  psi.reserve(static_cast<std::size_t>(family.scale_count()));
  for (int j = family.j_min(); j <= family.j_max(); ++j) {
    std::vector<Complex> table = family.psi_table(j);
    for (int l = 0; l < p.band_limit; ++l) {
      for (int n = -(p.n_directions - 1); n <= p.n_directions - 1; ++n) {
        table[static_cast<std::size_t>(l) * width + n + p.n_directions - 1] *=
            std::polar(1.0, -n * gamma);
      }
    }
    psi.push_back(std::move(table));
  }
  std::vector<double> phi(static_cast<std::size_t>(p.band_limit));
  for (int l = 0; l < p.band_limit; ++l) phi[static_cast<std::size_t>(l)] = family.phi(l);
  return WaveletFamily::from_components(p, std::move(psi), std::move(phi),
                                        family.kernels());
}

}  // namespace spinwav
