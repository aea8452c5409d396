#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cvbell/gaussian.hpp"

namespace cvbell {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
};

struct VerifyOptions {
  // Skip the photon-number-basis oracle.
  bool fast = false;
  // Splitter used to build the Gaussian GHZ state; overridable so tests can
  // confirm that a broken convention is caught.
  SplitterFactory splitter = [](int i, int j, double theta, int modes) {
    return beamsplitter(i, j, theta, modes);
  };
};

// Cross-path checks: beam-splitter construction vs closed-form quadratic
// form, purity, Wigner-route vs closed-form correlations, full expansion vs
// class coefficients, the l1 norm, zero-squeezing and large-squeezing limits,
// and (unless fast) the Fock-basis parity oracle.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

void print_report(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace cvbell
