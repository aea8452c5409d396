#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

#include "cvbell/errors.hpp"
#include "cvbell/optimizer.hpp"

using namespace cvbell;

TEST_CASE("two-party asymptotic maximum") {
  const auto res = maximize_asymptotic(2);
  CHECK(std::abs(res.argmax - std::log(2.0) / 3) < 1e-6);
  CHECK(std::abs(res.value - (1 + 2 * std::pow(2.0, -1.0 / 3) - std::pow(2.0, -4.0 / 3))) < 1e-12);
  CHECK(res.bracket.first == 0.0);
  CHECK(res.bracket.second == kDefaultScaledCeiling);
}

TEST_CASE("three- and five-party asymptotic maxima") {
  const auto r3 = maximize_asymptotic(3);
  CHECK(std::abs(r3.argmax - 3 * std::log(3.0) / 16) < 1e-6);
  CHECK(std::abs(r3.value - 2.3245) < 1e-4);
  const auto r5 = maximize_asymptotic(5);
  CHECK(std::abs(r5.argmax - 5 * std::log(2.0) / 24) < 1e-6);
  CHECK(std::abs(r5.value - 2.476) < 1e-3);
}

TEST_CASE("large-N asymptotic maxima") {
  const auto r9 = maximize_asymptotic(9);
  CHECK(std::abs(r9.value - 2.6) < 0.05);
  const auto r85 = maximize_asymptotic(85);
  CHECK(std::abs(r85.value - 2.8) < 0.05);
  CHECK(r85.cancellation_error < 1e-6 * r85.value);
  CHECK(r85.local_maxima.size() >= 1);
}

TEST_CASE("no violation without squeezing") {
  for (int n = 2; n <= 9; ++n) {
    const auto res = maximize_over_displacement(n, 0.0);
    CHECK(res.value <= 2 + 1e-10);
  }
  const auto r2 = maximize_over_displacement(2, 0.0);
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r2.argmax == 0.0);
}

TEST_CASE("violation for every nonzero squeezing") {
  for (int n = 2; n <= 9; ++n) {
    for (double r : {0.05, 0.1, 0.3, 0.8, 1.5}) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(maximize_over_displacement(n, r).value > 2.0);
    }
  }
}

TEST_CASE("modest squeezing with five parties") {
  const auto res = maximize_over_displacement(5, 0.3);
  CHECK(res.value >= 2.19);
}

TEST_CASE("strong squeezing maps back to the limit") {
  const auto res = maximize_over_displacement(2, 2.0);
  const double predicted = std::log(2.0) / 3 * std::exp(-4.0);
  CHECK(std::abs(res.argmax - predicted) < 0.02 * predicted);
  CHECK(std::abs(res.value - 2.19) < 5e-3);
  for (int n = 2; n <= 9; ++n) {
    const double finite = maximize_over_displacement(n, 5.0).value;
    CHECK(std::abs(finite - maximize_asymptotic(n).value) < 1e-3);
  }
}

TEST_CASE("result invariants") {
  for (int n : {2, 4, 7}) {
    for (double r : {0.1, 0.9}) {
      const EqualSettingsBell bell(n);
      const auto res = maximize_over_displacement(n, r, 3.0);
      CHECK(res.argmax >= res.bracket.first);
      CHECK(res.argmax <= res.bracket.second);
      CHECK(res.value >= bell.at(r, res.bracket.first).value);
      CHECK(res.value >= bell.at(r, res.bracket.second).value);
      double best_dense = -1e300;
      for (int i = 0; i <= 4000; ++i) best_dense = std::max(best_dense, bell.at(r, 3.0 * i / 4000).value);
      CHECK(res.value >= best_dense - 1e-9);
      CHECK(res.value == doctest::Approx(bell.at(r, res.argmax).value).epsilon(1e-14));
      for (std::size_t i = 1; i < res.local_maxima.size(); ++i) {
        CHECK(res.local_maxima[i - 1].arg < res.local_maxima[i].arg);
      }
    }
  }
}

TEST_CASE("scanner refinement never loses to the scan") {
  ScanOptions opts;
  opts.scan_points = 200;
  auto f = [](double x) {
    BellValue v;
    v.value = std::sin(7 * x) * std::exp(-x);
    return v;
  };
  const auto res = maximize_scanned(f, 3.0, opts);
  CHECK(std::abs(res.argmax - std::atan(7.0) / 7) < 1e-8);
  CHECK(res.local_maxima.size() >= 3);
  CHECK_THROWS_AS(maximize_scanned(f, 0.0), InvalidArgument);
  opts.scan_points = 10;
  CHECK_THROWS_AS(maximize_scanned(f, 1.0, opts), InvalidArgument);
  CHECK_THROWS_AS(maximize_asymptotic(3, 1.0), InvalidArgument);
}

TEST_CASE("ties resolve to the smaller argument") {
  auto f = [](double x) {
    BellValue v;
    v.value = std::pow(std::sin(2 * std::numbers::pi * x), 2);
    return v;
  };
  const auto res = maximize_scanned(f, 2.0);
  CHECK(std::abs(res.argmax - 0.25) < 1e-8);
}

TEST_CASE("surface scan") {
  const std::vector<double> rs{0.0, 0.5, 1.0};
  const std::vector<double> js{0.0, 0.01, 0.1, 1.0};
  const auto grid = scan_surface(2, rs, js);
  REQUIRE(grid.size() == 12);
  CHECK(grid[0].value == 2.0);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t k = 0; k < js.size(); ++k) {
      CHECK(grid[i * js.size() + k].value == doctest::Approx(oracle::bell2(rs[i], js[k])).epsilon(1e-12));
    }
  }
  std::vector<double> fine;
  for (int k = 0; k <= 200; ++k) fine.push_back(0.01 * k);
  for (int n = 2; n <= 8; ++n) {
    for (const auto& v : scan_surface(n, std::vector<double>{0.0}, fine)) CHECK(v.value <= 2 + 1e-12);
  }
}

TEST_CASE("phase optimization") {
  SUBCASE("three parties settle on equal imaginary settings") {
    const auto res = optimize_phases(3, 1.0, 0.05);
    REQUIRE(res.phases.size() == 3);
    for (double phi : res.phases) {
      CHECK(std::abs(std::remainder(phi - std::numbers::pi / 2, std::numbers::pi)) < 1e-3);
    }
    CHECK(std::abs(std::remainder(res.phases[0] - res.phases[1], 2 * std::numbers::pi)) < 1e-3);
    CHECK(std::abs(std::remainder(res.phases[1] - res.phases[2], 2 * std::numbers::pi)) < 1e-3);
    CHECK(res.value >= bell_value_equal_settings(3, 1.0, 0.05).value - 1e-9);
  }
  SUBCASE("two parties at the optimum recover the closed form") {
    const double j = std::log(2.0) / 3 * std::exp(-2.0);
    const auto res = optimize_phases(2, 1.0, j);
    CHECK(res.value >= oracle::bell2(1.0, j) - 1e-9);
  }
  SUBCASE("zero displacement") {
    const auto res = optimize_phases(3, 0.7, 0.0);
    CHECK(res.value == doctest::Approx(2.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(optimize_phases(11, 0.1, 0.1), InvalidArgument);
}
