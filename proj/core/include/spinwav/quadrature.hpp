#pragma once

#include <vector>

namespace spinwav {

// Gauss-Legendre nodes and weights on [-1, 1].  Exact for polynomials of
// degree <= 2n - 1.  Nodes are returned in ascending order.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

}  // namespace spinwav
