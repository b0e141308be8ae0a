#include "spinwav/wigner_d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wigner_engine.hpp"

namespace spinwav {

WignerDTable::WignerDTable(int l_max, double beta, int n)
    : l_max_(l_max),
      beta_(beta),
      n_(n),
      values_(static_cast<std::size_t>(l_max + 1) * (l_max + 1), 0.0) {}

WignerDTable wigner_d_slice(int l_max, double beta, int n) {
  if (l_max < 0) {
    throw std::domain_error("wigner_d_slice: l_max must be >= 0");
  }
  if (!(beta >= 0.0 && beta <= std::numbers::pi)) {
    throw std::domain_error("wigner_d_slice: beta outside [0, pi]");
  }
  if (std::abs(n) > l_max) {
    throw std::domain_error("wigner_d_slice: |n| exceeds l_max");
  }

  WignerDTable table(l_max, beta, n);
  const double betas[1] = {beta};
  detail::BetaTrig bt(betas);
  detail::WignerWorkspace ws;
  for (int m = -l_max; m <= l_max; ++m) {
    wigner_d_run(bt, m, n, l_max, ws, [&](int l, const double* vals) {
      table.value(l, m) = vals[0];
    });
  }
  return table;
}

}  // namespace spinwav
