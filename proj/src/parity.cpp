#include "cvbell/parity.hpp"

#include <cmath>
#include <numbers>

#include "cvbell/errors.hpp"

namespace cvbell {

namespace {
constexpr double kBoundSlack = 1e-12;
}

CorrelationValue::CorrelationValue(double value) : value_(value) {
  if (!std::isfinite(value) || std::abs(value) > 1.0 + kBoundSlack) {
    throw NumericFailure("correlation value outside [-1, 1]: " + std::to_string(value));
  }
}

double pi_log_closed_form(int modes, Squeezing r, const PhasePoint& point) {
  if (modes < 2) throw InvalidArgument("pi_closed_form: mode count must be >= 2");
  if (point.modes() != modes) throw InvalidArgument("pi_closed_form: point length != mode count");
  Complex total{};
  double norm2 = 0.0;
  double self = 0.0;  // sum_i Re(a_i^2)
  for (const auto& a : point.alphas()) {
    total += a;
    norm2 += std::norm(a);
    self += a.real() * a.real() - a.imag() * a.imag();
  }
  const double cross = total.real() * total.real() - total.imag() * total.imag();  // Re(S^2)
  const double n = static_cast<double>(modes);
  const double two_r = 2.0 * r.value();
  return -2.0 * std::cosh(two_r) * norm2 + std::sinh(two_r) * (4.0 / n * cross - 2.0 * self);
}

CorrelationValue pi_closed_form(int modes, Squeezing r, const PhasePoint& point) {
  return CorrelationValue(std::exp(pi_log_closed_form(modes, r, point)));
}

CorrelationValue pi_from_state(const GaussianState& state, const PhasePoint& point) {
  if (point.modes() != state.modes()) {
    throw InvalidArgument("pi_from_state: point dimension does not match the state");
  }
  const double scale = std::pow(std::numbers::pi / 2.0, state.modes());
  return CorrelationValue(scale * wigner_at(state, point));
}

}  // namespace cvbell
