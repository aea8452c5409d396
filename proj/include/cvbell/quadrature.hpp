#pragma once

namespace cvbell {

// Quadrature convention: alpha = x + i p with x = Re(alpha), p = Im(alpha).
// The vacuum has <x^2> = <p^2> = 1/4, so its Wigner function is
// (2/pi) exp(-2x^2 - 2p^2). Every other normalization in the library is
// derived from this constant.
inline constexpr double kVacuumVariance = 0.25;

}  // namespace cvbell
