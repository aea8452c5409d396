#include "cvbell/phase_point.hpp"

#include <cmath>

#include "cvbell/errors.hpp"

namespace cvbell {

PhasePoint::PhasePoint(std::vector<Complex> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw InvalidArgument("PhasePoint: at least one mode required");
  for (const auto& a : alphas_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidArgument("PhasePoint: displacements must be finite");
    }
  }
}

PhasePoint::PhasePoint(std::initializer_list<Complex> alphas)
    : PhasePoint(std::vector<Complex>(alphas)) {}

PhasePoint PhasePoint::origin(int modes) {
  if (modes < 1) throw InvalidArgument("PhasePoint::origin: mode count must be >= 1");
  return PhasePoint(std::vector<Complex>(static_cast<std::size_t>(modes)));
}

}  // namespace cvbell
