#pragma once

#include <cstddef>
#include <vector>

namespace spinwav {

// Wigner small-d values d^l_{mn}(beta) for all 0 <= l <= l_max, |m| <= l,
// at fixed column index n.  Entries with l < max(|m|, |n|) are zero.
class WignerDTable {
 public:
  WignerDTable(int l_max, double beta, int n);

  int l_max() const { return l_max_; }
  double beta() const { return beta_; }
  int n() const { return n_; }

  double operator()(int l, int m) const {
    return values_[static_cast<std::size_t>(l) * l + l + m];
  }
  double& value(int l, int m) {
    return values_[static_cast<std::size_t>(l) * l + l + m];
  }
  const std::vector<double>& values() const { return values_; }

 private:
  int l_max_;
  double beta_;
  int n_;
  std::vector<double> values_;  // (l_max+1)^2 entries, index l^2 + l + m
};

// Evaluates d^l_{mn}(beta) for the full (l, m) slice at fixed n, by a
// three-term recursion in l that stays stable to high band-limits.
// Throws std::domain_error for beta outside [0, pi] or |n| > l_max.
WignerDTable wigner_d_slice(int l_max, double beta, int n);

}  // namespace spinwav
