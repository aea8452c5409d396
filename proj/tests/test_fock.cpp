#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "cvbell/errors.hpp"
#include "cvbell/fock.hpp"

using namespace cvbell;

namespace {

std::vector<Complex> random_alphas(std::mt19937_64& rng, int n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<Complex> a(n);
  for (auto& z : a) z = {u(rng), u(rng)};
  return a;
}

TruncatedState basis_state(int modes, int cutoff, std::vector<int> photons) {
  std::size_t size = 1;
  for (int m = 0; m < modes; ++m) size *= static_cast<std::size_t>(cutoff + 1);
  std::vector<Complex> amps(size, 0.0);
  std::size_t idx = 0;
  for (int m = 0; m < modes; ++m) idx = idx * (cutoff + 1) + photons[m];
  amps[idx] = 1.0;
  return TruncatedState(modes, cutoff, std::move(amps));
}

}  // namespace

TEST_CASE("squeezed vacuum amplitudes") {
  const auto vac = fock_squeezed_vacuum(Squeezing(0.0), SqueezeAxis::kPosition, 4);
  CHECK(vac.amplitudes()[0] == Complex(1.0));
  for (std::size_t i = 1; i < vac.amplitudes().size(); ++i) CHECK(vac.amplitudes()[i] == Complex(0.0));

  const auto sq = fock_squeezed_vacuum(Squeezing(0.3), SqueezeAxis::kPosition, 20);
  double even = 0, odd = 0;
  for (std::size_t i = 0; i < sq.amplitudes().size(); ++i) {
    (i % 2 == 0 ? even : odd) += std::norm(sq.amplitudes()[i]);
  }
  CHECK(odd == 0.0);
  CHECK(even - odd == doctest::Approx(1.0).epsilon(1e-8));

  const auto cov = quadrature_covariance(sq);
  CHECK(std::abs(cov(0, 0) - std::exp(-0.6) / 4) < 1e-6);
  CHECK(std::abs(cov(1, 1) - std::exp(0.6) / 4) < 1e-6);
  const auto mom = quadrature_covariance(fock_squeezed_vacuum(Squeezing(0.3), SqueezeAxis::kMomentum, 20));
  CHECK(std::abs(mom(0, 0) - std::exp(0.6) / 4) < 1e-6);
  CHECK(std::abs(mom(1, 1) - std::exp(-0.6) / 4) < 1e-6);
}

TEST_CASE("insufficient cutoff reports the required one") {
  try {
    fock_squeezed_vacuum(Squeezing(1.0), SqueezeAxis::kPosition, 4);
    FAIL("expected CapacityExceeded");
  } catch (const CapacityExceeded& e) {
    const auto need = static_cast<int>(e.required());
    CHECK(need > 4);
    CHECK(need % 2 == 0);
    const auto ok = fock_squeezed_vacuum(Squeezing(1.0), SqueezeAxis::kPosition, need);
    CHECK(ok.norm_squared() >= 1 - 1e-8);
    if (need > 6) {
      CHECK_THROWS_AS(fock_squeezed_vacuum(Squeezing(1.0), SqueezeAxis::kPosition, need - 2),
                      CapacityExceeded);
    }
  }
  CHECK_THROWS_AS(fock_squeezed_vacuum(Squeezing(0.1), SqueezeAxis::kPosition, 5), InvalidArgument);
}

TEST_CASE("beam splitter in the number basis") {
  SUBCASE("theta = 0 flips the sign of odd photon numbers in mode j") {
    const auto out = fock_beamsplitter_apply(basis_state(2, 3, {1, 1}), 0, 1, 0.0);
    const auto& a = out.amplitudes();
    CHECK(std::abs(a[1 * 4 + 1] + 1.0) < 1e-14);
    const auto same = fock_beamsplitter_apply(basis_state(2, 3, {2, 0}), 0, 1, 0.0);
    CHECK(std::abs(same.amplitudes()[2 * 4] - 1.0) < 1e-14);
  }
  SUBCASE("single photon splits evenly") {
    const auto out = fock_beamsplitter_apply(basis_state(2, 3, {1, 0}), 0, 1, std::numbers::pi / 4);
    const auto& a = out.amplitudes();
    CHECK(std::abs(std::abs(a[1 * 4 + 0]) - 1 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(std::abs(a[0 * 4 + 1]) - 1 / std::sqrt(2.0)) < 1e-14);
    CHECK(out.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("two-mode network covariance matches the Gaussian construction") {
    const auto state = build_fock_ghz(2, Squeezing(0.3), 30);
    const auto cov = quadrature_covariance(state);
    const auto expected = build_ghz_state(2, Squeezing(0.3)).covariance();
    CHECK((cov - expected).cwiseAbs().maxCoeff() < 1e-6);
  }
  SUBCASE("three-mode network covariance") {
    const auto state = build_fock_ghz(3, Squeezing(0.2), 14);
    const auto cov = quadrature_covariance(state);
    CHECK((cov - build_ghz_state(3, Squeezing(0.2)).covariance()).cwiseAbs().maxCoeff() < 1e-6);
  }
  CHECK_THROWS_AS(fock_beamsplitter_apply(basis_state(2, 3, {0, 0}), 1, 1, 0.2), InvalidArgument);
}

TEST_CASE("displacement matrix") {
  const Complex beta(0.4, -0.3);
  const auto d = displacement_matrix(beta, 25);
  double fact = 1;
  for (int m = 0; m <= 25; ++m) {
    if (m > 0) fact *= m;
    const Complex expected = std::exp(-std::norm(beta) / 2) * std::pow(beta, m) / std::sqrt(fact);
    CHECK(std::abs(d(m, 0) - expected) < 1e-13);
  }
  const auto inv = displacement_matrix(-beta, 40);
  const Eigen::MatrixXcd prod = inv * displacement_matrix(beta, 40);
  CHECK((prod.topLeftCorner(10, 10) - Eigen::MatrixXcd::Identity(10, 10)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("displaced parity of the vacuum") {
  const auto vac = fock_squeezed_vacuum(Squeezing(0.0), SqueezeAxis::kPosition, 10);
  CHECK(displaced_parity_expectation(vac, PhasePoint{0.0}).value() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(displaced_parity_expectation(vac, PhasePoint{Complex(0.3, 0.2)}).value() ==
        doctest::Approx(std::exp(-2 * 0.13)).epsilon(1e-12));
}

TEST_CASE("two-mode oracle agreement") {
  const auto state = build_fock_ghz(2, Squeezing(0.3), 30);
  for (double j : {0.02, 0.1, 0.3}) {
    const Complex a(0, std::sqrt(j));
    const PhasePoint p{a, a};
    CHECK(std::abs(displaced_parity_expectation(state, p).value() -
                   pi_closed_form(2, Squeezing(0.3), p).value()) < 1e-6);
  }
  std::mt19937_64 rng(41);
  int count = 0;
  double worst = 0;
  for (; count < 60; ++count) {
    const PhasePoint p(random_alphas(rng, 2, 0.6));
    const double v = displaced_parity_expectation(state, p);
    CHECK(std::abs(v) <= 1 + 1e-12);
    worst = std::max(worst, std::abs(v - pi_closed_form(2, Squeezing(0.3), p).value()));
  }
  CHECK(count >= 50);
  CHECK(worst < 1e-6);
}

TEST_CASE("three-mode oracle agreement") {
  const auto state = build_fock_ghz(3, Squeezing(0.2), 14);
  std::mt19937_64 rng(43);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    const PhasePoint p(random_alphas(rng, 3, 0.4));
    worst = std::max(worst, std::abs(displaced_parity_expectation(state, p).value() -
                                     pi_closed_form(3, Squeezing(0.2), p).value()));
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("agreement improves with the cutoff") {
  FockOptions loose;
  loose.norm_tolerance = 0.5;
  std::mt19937_64 rng(47);
  std::vector<PhasePoint> points;
  for (int t = 0; t < 20; ++t) points.emplace_back(random_alphas(rng, 2, 0.4));
  double previous = 1e300;
  for (int cutoff = 8; cutoff <= 36; cutoff += 4) {
    CAPTURE(cutoff);
    const auto state = build_fock_ghz(2, Squeezing(0.5), cutoff, loose);
    double worst = 0;
    for (const auto& p : points) {
      worst = std::max(worst, std::abs(displaced_parity_expectation(state, p, loose).value() -
                                       pi_closed_form(2, Squeezing(0.5), p).value()));
    }
    CHECK(worst <= previous + 1e-12);
    previous = worst;
  }
  CHECK(previous < 1e-8);
}

TEST_CASE("automatic cutoff and oracle limits") {
  const auto state = build_fock_ghz_auto(2, Squeezing(0.4));
  CHECK(state.norm_squared() >= 1 - 1e-8);
  CHECK_THROWS_AS(build_fock_ghz_auto(4, Squeezing(0.1)), CapacityExceeded);
  FockOptions tiny;
  tiny.memory_budget = 1024;
  CHECK_THROWS_AS(build_fock_ghz(3, Squeezing(0.2), 14, tiny), CapacityExceeded);
}
