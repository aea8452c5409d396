#include "cvbell/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>

#include "cvbell/bell.hpp"
#include "cvbell/fock.hpp"
#include "cvbell/parity.hpp"

namespace cvbell {

namespace {

CheckResult make(std::string name, double error, double tolerance) {
  return {std::move(name), error <= tolerance, error, tolerance};
}

PhasePoint random_point(std::mt19937_64& rng, int n, double spread) {
  std::normal_distribution<double> g(0.0, spread);
  std::vector<Complex> a;
  for (int i = 0; i < n; ++i) a.emplace_back(g(rng), g(rng));
  return PhasePoint(std::move(a));
}

CheckResult check_quadratic_form(const VerifyOptions& options) {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (double r : {0.0, 0.5, 1.0}) {
      const auto state = build_ghz_state(n, Squeezing(r), options.splitter);
      const Eigen::MatrixXd diff = quadratic_form_of(state) - ghz_closed_form_quadratic(n, Squeezing(r));
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  return make("quadratic form vs closed form", worst, 1e-12);
}

CheckResult check_purity(const VerifyOptions& options) {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (double r : {0.0, 0.3, 1.0, 2.0}) {
      const auto nu = symplectic_eigenvalues(build_ghz_state(n, Squeezing(r), options.splitter));
      worst = std::max(worst, (nu.array() - 0.25).abs().maxCoeff());
    }
  }
  return make("symplectic eigenvalues = 1/4", worst, 1e-10);
}

CheckResult check_gaussian_route(const VerifyOptions& options) {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (double r : {0.0, 0.4, 1.2}) {
      const auto state = build_ghz_state(n, Squeezing(r), options.splitter);
      for (int s = 0; s < 100; ++s) {
        const auto point = random_point(rng, n, 0.3 * std::exp(-r));
        const double closed = pi_closed_form(n, Squeezing(r), point);
        const double wigner = pi_from_state(state, point);
        worst = std::max(worst, std::abs(wigner - closed) / std::max(std::abs(closed), 1e-300));
      }
    }
  }
  return make("Wigner route vs closed-form correlation (rel)", worst, 1e-10);
}

CheckResult check_expansion() {
  double mismatches = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const auto classes = class_coefficients(n);
    for (const auto& term : mk_expand(n)) {
      const int k = std::popcount(term.selector);
      if (!(term.coefficient == classes.coeffs[k])) mismatches += 1.0;
    }
  }
  return make("term list grouped = class coefficients (mismatches)", mismatches, 0.0);
}

CheckResult check_l1_norm() {
  double worst = 0.0;
  for (int n = 2; n <= 12; ++n) {
    Dyadic total;
    for (const auto& term : mk_expand(n)) total = total + term.coefficient.abs();
    const Dyadic expected(BigInt(1) << (n / 2 + 1));
    worst = std::max(worst, std::abs((total - expected).to_double()));
  }
  return make("l1 norm = 2^(floor(n/2)+1)", worst, 0.0);
}

CheckResult check_zero_squeezing() {
  double worst = 0.0;
  for (int n : {3, 11}) {
    for (int i = 0; i <= 40; ++i) {
      const double j = 0.05 * i;
      const double closed = bell_zero_squeezing(n, j).value;
      const double summed = bell_value_equal_settings(n, 0.0, j).value;
      worst = std::max(worst, std::abs(closed - summed));
    }
  }
  return make("zero-squeezing closed form vs class sum", worst, 1e-12);
}

CheckResult check_asymptotic_limit() {
  double worst = 0.0;
  for (int n = 2; n <= 9; ++n) {
    const EqualSettingsBell bell(n);
    for (double a : {0.01, 0.05, 0.1, 0.2, 0.5, 1.0}) {
      const double finite = bell.at(5.0, a * std::exp(-10.0)).value;
      worst = std::max(worst, std::abs(finite - bell.asymptotic(a).value));
    }
  }
  return make("large-squeezing limit (r = 5)", worst, 1e-3);
}

CheckResult check_fock(int n, double r, int cutoff, double tolerance) {
  const auto state = build_fock_ghz(n, Squeezing(r), cutoff);
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const auto point = random_point(rng, n, 0.25);
    const double fock = displaced_parity_expectation(state, point);
    worst = std::max(worst, std::abs(fock - pi_closed_form(n, Squeezing(r), point)));
  }
  char name[96];
  std::snprintf(name, sizeof name, "Fock parity oracle N=%d r=%.1f cutoff=%d", n, r, cutoff);
  return make(name, worst, tolerance);
}

template <typename F>
CheckResult guarded(const char* name, F&& f) {
  try {
    return f();
  } catch (const std::exception&) {
    return {name, false, INFINITY, 0.0};
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> checks;
  checks.push_back(guarded("quadratic form", [&] { return check_quadratic_form(options); }));
  checks.push_back(guarded("purity", [&] { return check_purity(options); }));
  checks.push_back(guarded("Wigner route", [&] { return check_gaussian_route(options); }));
  checks.push_back(guarded("expansion", [] { return check_expansion(); }));
  checks.push_back(guarded("l1 norm", [] { return check_l1_norm(); }));
  checks.push_back(guarded("zero squeezing", [] { return check_zero_squeezing(); }));
  checks.push_back(guarded("large squeezing", [] { return check_asymptotic_limit(); }));
  if (!options.fast) {
    checks.push_back(guarded("Fock N=2", [] { return check_fock(2, 0.3, 30, 1e-6); }));
    checks.push_back(guarded("Fock N=3", [] { return check_fock(3, 0.2, 14, 1e-5); }));
  }
  return checks;
}

void print_report(const std::vector<CheckResult>& checks, std::ostream& out) {
  char line[160];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-4s  %-52s  err=%-10.3g tol=%.1g\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.max_error, c.tolerance);
    out << line;
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
  out << (failed == 0 ? "all checks passed\n" : std::to_string(failed) + " check(s) failed\n");
}

}  // namespace cvbell
