#include "cvbell/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cvbell/errors.hpp"
#include "cvbell/quadrature.hpp"

namespace cvbell {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kSymplecticTolerance = 1e-12;

void require_modes(int modes, int minimum, const char* what) {
  if (modes < minimum) {
    throw InvalidArgument(std::string(what) + ": mode count must be >= " +
                          std::to_string(minimum) + ", got " + std::to_string(modes));
  }
}

void require_square_even(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw InvalidArgument(std::string(what) + ": expected a non-empty 2N x 2N matrix");
  }
}

Eigen::LLT<Eigen::MatrixXd> factor(const Eigen::MatrixXd& covariance) {
  Eigen::LLT<Eigen::MatrixXd> llt(covariance);
  if (llt.info() != Eigen::Success) {
    throw NumericFailure("covariance is not positive definite");
  }
  return llt;
}

double log_det(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  const auto& l = llt.matrixLLT();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) acc += std::log(l(i, i));
  return 2.0 * acc;
}

}  // namespace

Squeezing::Squeezing(double r) : r_(r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw InvalidArgument("squeezing parameter must be finite and >= 0");
  }
}

GaussianState::GaussianState(Eigen::MatrixXd covariance) : covariance_(std::move(covariance)) {
  require_square_even(covariance_, "GaussianState");
  if (!covariance_.allFinite()) throw InvalidArgument("GaussianState: non-finite covariance");
  const double asym = (covariance_ - covariance_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance) {
    throw InvalidArgument("GaussianState: covariance is not symmetric");
  }
  covariance_ = 0.5 * (covariance_ + covariance_.transpose());
  factor(covariance_);
}

SymplecticOp::SymplecticOp(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  require_square_even(matrix_, "SymplecticOp");
  const Eigen::MatrixXd omega = symplectic_form(modes());
  const double err = (matrix_ * omega * matrix_.transpose() - omega).cwiseAbs().maxCoeff();
  if (!(err < kSymplecticTolerance)) {
    throw InvalidArgument("SymplecticOp: matrix does not preserve the symplectic form");
  }
}

GaussianState SymplecticOp::apply(const GaussianState& state) const {
  if (state.modes() != modes()) throw InvalidArgument("SymplecticOp::apply: mode count mismatch");
  return GaussianState(matrix_ * state.covariance() * matrix_.transpose());
}

SymplecticOp SymplecticOp::then(const SymplecticOp& next) const {
  if (next.modes() != modes()) throw InvalidArgument("SymplecticOp::then: mode count mismatch");
  return SymplecticOp(next.matrix_ * matrix_);
}

Eigen::MatrixXd symplectic_form(int modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

GaussianState vacuum_state(int modes) {
  require_modes(modes, 1, "vacuum_state");
  return GaussianState(kVacuumVariance * Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

GaussianState squeeze_mode(const GaussianState& state, int mode, Squeezing r, SqueezeAxis axis) {
  if (mode < 0 || mode >= state.modes()) {
    throw InvalidArgument("squeeze_mode: mode index " + std::to_string(mode) + " out of range");
  }
  const double shrink = std::exp(-r.value());
  const double grow = std::exp(r.value());
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * state.modes(), 2 * state.modes());
  s(2 * mode, 2 * mode) = axis == SqueezeAxis::kPosition ? shrink : grow;
  s(2 * mode + 1, 2 * mode + 1) = axis == SqueezeAxis::kPosition ? grow : shrink;
  return SymplecticOp(std::move(s)).apply(state);
}

SymplecticOp beamsplitter(int i, int j, double theta, int modes) {
  require_modes(modes, 2, "beamsplitter");
  if (i < 0 || j < 0 || i >= modes || j >= modes) {
    throw InvalidArgument("beamsplitter: mode index out of range");
  }
  if (i == j) throw InvalidArgument("beamsplitter: modes must differ");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  for (int q = 0; q < 2; ++q) {
    const int qi = 2 * i + q;
    const int qj = 2 * j + q;
    m(qi, qi) = c;
    m(qi, qj) = s;
    m(qj, qi) = s;
    m(qj, qj) = -c;
  }
  return SymplecticOp(std::move(m));
}

std::vector<double> ghz_mixing_angles(int modes) {
  require_modes(modes, 2, "ghz_mixing_angles");
  std::vector<double> angles;
  angles.reserve(modes - 1);
  for (int k = 0; k + 1 < modes; ++k) {
    angles.push_back(std::acos(1.0 / std::sqrt(static_cast<double>(modes - k))));
  }
  return angles;
}

GaussianState build_ghz_state(int modes, Squeezing r) {
  return build_ghz_state(modes, r, [](int i, int j, double theta, int n) {
    return beamsplitter(i, j, theta, n);
  });
}

GaussianState build_ghz_state(int modes, Squeezing r, const SplitterFactory& splitter) {
  require_modes(modes, 2, "build_ghz_state");
  GaussianState state = squeeze_mode(vacuum_state(modes), 0, r, SqueezeAxis::kMomentum);
  for (int k = 1; k < modes; ++k) state = squeeze_mode(state, k, r, SqueezeAxis::kPosition);
  const auto angles = ghz_mixing_angles(modes);
  for (int k = 0; k + 1 < modes; ++k) state = splitter(k, k + 1, angles[k], modes).apply(state);
  return state;
}

Eigen::VectorXd to_quadratures(const PhasePoint& point) {
  Eigen::VectorXd v(2 * point.modes());
  for (int k = 0; k < point.modes(); ++k) {
    v(2 * k) = point[k].real();
    v(2 * k + 1) = point[k].imag();
  }
  return v;
}

double wigner_at(const GaussianState& state, std::span<const double> quadratures) {
  if (static_cast<Eigen::Index>(quadratures.size()) != state.covariance().rows()) {
    throw InvalidArgument("wigner_at: point dimension does not match the state");
  }
  const auto llt = factor(state.covariance());
  const Eigen::Map<const Eigen::VectorXd> v(quadratures.data(),
                                            static_cast<Eigen::Index>(quadratures.size()));
  const double quad = v.dot(llt.solve(v));
  const double n = static_cast<double>(state.modes());
  const double log_norm = -n * std::log(2.0 * std::numbers::pi) - 0.5 * log_det(llt);
  return std::exp(log_norm - 0.5 * quad);
}

double wigner_at(const GaussianState& state, const PhasePoint& point) {
  if (point.modes() != state.modes()) {
    throw InvalidArgument("wigner_at: point dimension does not match the state");
  }
  const Eigen::VectorXd v = to_quadratures(point);
  return wigner_at(state, std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

Eigen::MatrixXd quadratic_form_of(const GaussianState& state) {
  const auto llt = factor(state.covariance());
  const auto dim = state.covariance().rows();
  Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(dim, dim));
  return 0.25 * (inv + inv.transpose());
}

Eigen::MatrixXd ghz_closed_form_quadratic(int modes, Squeezing r) {
  require_modes(modes, 2, "ghz_closed_form_quadratic");
  const double n = static_cast<double>(modes);
  const double weak = std::exp(-2.0 * r.value());
  const double strong = std::exp(2.0 * r.value());
  // (2/N)(sum_i y_i)^2 contributes 2/N to every (i, j) entry of its block.
  // (1/N) sum_{i,j}(y_i - y_j)^2 over ordered pairs equals
  // 2 sum_i y_i^2 - (2/N)(sum_i y_i)^2.
  const auto block = [n](double total_weight, double spread_weight, int i, int j) {
    const double total = 2.0 / n;
    const double spread = (i == j ? 2.0 : 0.0) - 2.0 / n;
    return total_weight * total + spread_weight * spread;
  };
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      m(2 * i, 2 * j) = block(weak, strong, i, j);
      m(2 * i + 1, 2 * j + 1) = block(strong, weak, i, j);
    }
  }
  return m;
}

Eigen::VectorXd symplectic_eigenvalues(const GaussianState& state) {
  const Eigen::MatrixXd a = symplectic_form(state.modes()) * state.covariance();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  if (solver.info() != Eigen::Success) throw NumericFailure("symplectic_eigenvalues: eigensolver failed");
  std::vector<double> nu;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    nu.push_back(std::abs(solver.eigenvalues()(k).imag()));
  }
  std::sort(nu.begin(), nu.end());
  Eigen::VectorXd out(state.modes());
  for (int k = 0; k < state.modes(); ++k) out(k) = 0.5 * (nu[2 * k] + nu[2 * k + 1]);
  return out;
}

}  // namespace cvbell
