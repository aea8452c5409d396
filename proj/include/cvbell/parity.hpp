#pragma once

#include "cvbell/gaussian.hpp"
#include "cvbell/phase_point.hpp"

namespace cvbell {

// Expectation of a product of displaced parity operators; always in [-1, 1].
class CorrelationValue {
 public:
  explicit CorrelationValue(double value);

  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

// Exponent of the closed-form correlation for the N-mode GHZ state:
//   -2 cosh(2r) sum|a_i|^2
//   + sinh(2r) [ (2/N) sum_{i,j} (a_i a_j + c.c.) - sum_i (a_i^2 + c.c.) ],
// with the double sum over all (i, j) including i = j. Real by construction.
double pi_log_closed_form(int modes, Squeezing r, const PhasePoint& point);

CorrelationValue pi_closed_form(int modes, Squeezing r, const PhasePoint& point);

// (pi/2)^N W(alpha) for an arbitrary zero-mean Gaussian state.
CorrelationValue pi_from_state(const GaussianState& state, const PhasePoint& point);

}  // namespace cvbell
