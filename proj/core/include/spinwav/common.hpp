#pragma once

#include <complex>
#include <numbers>

namespace spinwav {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;
inline constexpr double kEightPiSq = 8.0 * std::numbers::pi * std::numbers::pi;

// zyz Euler angles: rotation about z, y, z by gamma, beta, alpha respectively.
struct EulerAngles {
  double alpha = 0.0;  // in [0, 2pi)
  double beta = 0.0;   // in [0, pi]
  double gamma = 0.0;  // in [0, 2pi)
};

}  // namespace spinwav
