#include "spinwav/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinwav {

namespace {

// Legendre P_n and its derivative at x, by upward recurrence.
void legendre_pair(int n, long double x, long double& p, long double& dp) {
  long double p0 = 1.0L;
  long double p1 = x;
  for (int k = 2; k <= n; ++k) {
    long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = (n == 0) ? p0 : p1;
  dp = (n == 0) ? 0.0L : n * (x * p1 - p0) / (x * x - 1.0L);
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: order must be >= 1");
  }
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton in extended precision.
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) /
                             (n + 0.5L));
    long double p = 0.0L;
    long double dp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, p, dp);
      const long double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L * (1.0L + std::fabs(x))) break;
    }
    legendre_pair(n, x, p, dp);
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    // node i counts down from +1; store ascending.
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.nodes[i] = static_cast<double>(-x);
    rule.weights[n - 1 - i] = static_cast<double>(w);
    rule.weights[i] = static_cast<double>(w);
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

}  // namespace spinwav
