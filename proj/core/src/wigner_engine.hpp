#pragma once

// Internal engine for Wigner small-d recursions, vectorised over a set of
// colatitude nodes.  For fixed (m, n) the values d^l_{mn}(beta_b) are
// produced for l = max(|m|, |n|) .. l_max in one upward sweep.  Seeds are
// evaluated in log space and the sweep renormalises on the fly, so slices
// stay finite and accurate even where the seed underflows double range.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <span>
#include <vector>

namespace spinwav::detail {

struct BetaTrig {
  std::vector<double> cos_beta;
  // Seed magnitudes carry exponents up to 2 l_max, so the logs are kept in
  // extended precision; their error enters the seed multiplied by that
  // exponent.
  std::vector<long double> log2_cos_half;  // -inf at beta = pi
  std::vector<long double> log2_sin_half;  // -inf at beta = 0

  explicit BetaTrig(std::span<const double> betas) {
    const std::size_t nb = betas.size();
    cos_beta.resize(nb);
    log2_cos_half.resize(nb);
    log2_sin_half.resize(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      const long double half = 0.5L * static_cast<long double>(betas[b]);
      cos_beta[b] = std::cos(betas[b]);
      log2_cos_half[b] = std::log2(std::cos(half));
      log2_sin_half[b] = std::log2(std::sin(half));
    }
  }

  int size() const { return static_cast<int>(cos_beta.size()); }
};

// Reusable per-thread scratch for the sweep.
struct WignerWorkspace {
  std::vector<double> dprev, dcur, scale, out;
  std::vector<int> expo;

  void resize(std::size_t nb) {
    dprev.assign(nb, 0.0);
    dcur.assign(nb, 0.0);
    scale.assign(nb, 1.0);
    out.assign(nb, 0.0);
    expo.assign(nb, 0);
  }
};

// Reduce (m, n) to a representative with second index = max(|m|, |n|) >= |m|,
// using the sign-free and sign-carrying d-function symmetries.
struct CanonicalMN {
  int m, n, sign;
};

inline CanonicalMN canonical_mn(int m, int n) {
  const int flip = ((m - n) & 1) ? -1 : 1;
  if (n >= std::abs(m)) return {m, n, 1};
  if (-n >= std::abs(m)) return {-m, -n, flip};    // d_{mn} = (-1)^{m-n} d_{-m,-n}
  if (m >= std::abs(n)) return {n, m, flip};       // d_{mn} = (-1)^{m-n} d_{nm}
  return {-n, -m, 1};                              // d_{mn} = d_{-n,-m}
}

// d^{l0}_{mn} at l0 = max(|m|,|n|), as mantissa * 2^expo.
inline void seed_value(const BetaTrig& bt, int m, int n, int b,
                       double& mantissa, int& expo) {
  const CanonicalMN c = canonical_mn(m, n);
  const int np = c.n + c.m;  // exponent of cos(beta/2)
  const int nm = c.n - c.m;  // exponent of sin(beta/2)
  const long double log2_binom =
      0.5L *
      (std::lgammal(2.0L * c.n + 1.0L) - std::lgammal(np + 1.0L) -
       std::lgammal(nm + 1.0L)) /
      std::numbers::ln2_v<long double>;
  long double log2_mag = log2_binom;
  if (np > 0) {
    if (std::isinf(bt.log2_cos_half[b])) {
      mantissa = 0.0;
      expo = 0;
      return;
    }
    log2_mag += np * bt.log2_cos_half[b];
  }
  if (nm > 0) {
    if (std::isinf(bt.log2_sin_half[b])) {
      mantissa = 0.0;
      expo = 0;
      return;
    }
    log2_mag += nm * bt.log2_sin_half[b];
  }
  const int e = static_cast<int>(std::floor(log2_mag));
  mantissa = static_cast<double>(c.sign * std::exp2(log2_mag - e));
  expo = e;
}

// Runs the recursion for fixed (m, n) over all nodes in bt.
// visit(l, vals) is called for l = max(|m|,|n|) .. l_max with
// vals[b] = d^l_{mn}(beta_b).
template <typename Visitor>
void wigner_d_run(const BetaTrig& bt, int m, int n, int l_max,
                  WignerWorkspace& ws, Visitor&& visit) {
  const int nb = bt.size();
  const int l0 = std::max(std::abs(m), std::abs(n));
  if (l0 > l_max) return;

  ws.resize(static_cast<std::size_t>(nb));
  double* dprev = ws.dprev.data();
  double* dcur = ws.dcur.data();
  double* scale = ws.scale.data();
  double* out = ws.out.data();
  int* expo = ws.expo.data();

  for (int b = 0; b < nb; ++b) {
    seed_value(bt, m, n, b, dcur[b], expo[b]);
    scale[b] = std::ldexp(1.0, expo[b]);
    out[b] = dcur[b] * scale[b];
  }
  visit(l0, static_cast<const double*>(out));

  constexpr double kRescaleAt = 0x1p250;
  constexpr double kRescaleBy = 0x1p-250;
  const double mn = static_cast<double>(m) * n;
  const double* x = bt.cos_beta.data();

  double u_l = 0.0;  // sqrt((l^2-m^2)(l^2-n^2)); zero at l = l0
  for (int l = l0; l < l_max; ++l) {
    const double lp = l + 1.0;
    const double u_lp =
        std::sqrt((lp * lp - static_cast<double>(m) * m) *
                  (lp * lp - static_cast<double>(n) * n));
    const double a = (2 * l + 1) * lp / u_lp;
    const double bb = (mn == 0.0) ? 0.0 : -(2 * l + 1) * mn / (l * u_lp);
    const double cc = (u_l == 0.0) ? 0.0 : lp * u_l / (l * u_lp);
    for (int b = 0; b < nb; ++b) {
      const double next = (a * x[b] + bb) * dcur[b] - cc * dprev[b];
      dprev[b] = dcur[b];
      dcur[b] = next;
    }
    for (int b = 0; b < nb; ++b) {
      if (std::fabs(dcur[b]) > kRescaleAt) {
        dcur[b] *= kRescaleBy;
        dprev[b] *= kRescaleBy;
        expo[b] += 250;
        scale[b] = std::ldexp(1.0, expo[b]);
      }
      out[b] = dcur[b] * scale[b];
    }
    visit(l + 1, static_cast<const double*>(out));
    u_l = u_lp;
  }
}

}  // namespace spinwav::detail
