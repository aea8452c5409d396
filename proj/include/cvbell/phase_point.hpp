#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cvbell {

using Complex = std::complex<double>;

// N phase-space displacements alpha_i = x_i + i p_i, one per mode.
class PhasePoint {
 public:
  explicit PhasePoint(std::vector<Complex> alphas);
  PhasePoint(std::initializer_list<Complex> alphas);

  static PhasePoint origin(int modes);

  int modes() const noexcept { return static_cast<int>(alphas_.size()); }
  std::span<const Complex> alphas() const noexcept { return alphas_; }
  const Complex& operator[](std::size_t i) const { return alphas_[i]; }

 private:
  std::vector<Complex> alphas_;
};

}  // namespace cvbell
