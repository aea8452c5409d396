#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cvbell/phase_point.hpp"

namespace cvbell {

// Dimensionless squeezing parameter r >= 0; r = 0 is the vacuum.
class Squeezing {
 public:
  constexpr Squeezing() = default;
  explicit Squeezing(double r);

  double value() const noexcept { return r_; }

 private:
  double r_ = 0.0;
};

enum class SqueezeAxis { kPosition, kMomentum };

// Zero-mean N-mode Gaussian state. Quadratures are interleaved
// (x1, p1, x2, p2, ...). The covariance is checked for symmetry (1e-12
// entrywise) and positive definiteness on construction.
class GaussianState {
 public:
  explicit GaussianState(Eigen::MatrixXd covariance);

  int modes() const noexcept { return static_cast<int>(covariance_.rows() / 2); }
  const Eigen::MatrixXd& covariance() const noexcept { return covariance_; }

 private:
  Eigen::MatrixXd covariance_;
};

// Linear map on the 2N quadratures that preserves the symplectic form.
class SymplecticOp {
 public:
  explicit SymplecticOp(Eigen::MatrixXd matrix);

  int modes() const noexcept { return static_cast<int>(matrix_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }

  GaussianState apply(const GaussianState& state) const;
  SymplecticOp then(const SymplecticOp& next) const;

 private:
  Eigen::MatrixXd matrix_;
};

// Block-diagonal form diag(J, ..., J), J = [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int modes);

GaussianState vacuum_state(int modes);

GaussianState squeeze_mode(const GaussianState& state, int mode, Squeezing r,
                           SqueezeAxis axis);

// a_i -> a_i cos(theta) + a_j sin(theta), a_j -> a_i sin(theta) - a_j cos(theta).
// Both quadratures of each mode transform with the same real 2x2 matrix.
SymplecticOp beamsplitter(int i, int j, double theta, int modes);

// The mixing angles theta_k = acos(1/sqrt(n - k)) applied to mode pairs
// (k, k+1), k = 0 .. n-2, in that order.
std::vector<double> ghz_mixing_angles(int modes);

// Momentum-squeezed mode 0, position-squeezed modes 1..n-1, then the
// beam-splitter cascade B_{n-1,n}(pi/4) ... B_{1,2}(acos(1/sqrt(n))).
GaussianState build_ghz_state(int modes, Squeezing r);

// Same cascade with a caller-supplied splitter; used to inject faults when
// testing the verification harness.
using SplitterFactory = std::function<SymplecticOp(int i, int j, double theta, int modes)>;
GaussianState build_ghz_state(int modes, Squeezing r, const SplitterFactory& splitter);

// Zero-mean Gaussian Wigner density; integrates to 1 over phase space.
double wigner_at(const GaussianState& state, const PhasePoint& point);
double wigner_at(const GaussianState& state, std::span<const double> quadratures);

// M with W(v) = (2/pi)^N exp(-v^T M v) for pure states; M = covariance^{-1} / 2.
Eigen::MatrixXd quadratic_form_of(const GaussianState& state);

// The exponent matrix of the closed-form GHZ Wigner function, written out from
// its bracket structure: e^{-2r}[(2/N)(sum x)^2 + (1/N) sum_{i,j}(p_i - p_j)^2]
// + e^{2r}[(2/N)(sum p)^2 + (1/N) sum_{i,j}(x_i - x_j)^2], the double sums over
// all ordered pairs.
Eigen::MatrixXd ghz_closed_form_quadratic(int modes, Squeezing r);

// Sorted symplectic eigenvalues (N values). Pure states give N copies of 1/4.
Eigen::VectorXd symplectic_eigenvalues(const GaussianState& state);

// Flattens a phase point to interleaved quadratures (x1, p1, ...).
Eigen::VectorXd to_quadratures(const PhasePoint& point);

}  // namespace cvbell
