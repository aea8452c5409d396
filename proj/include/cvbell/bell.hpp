#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cvbell/dyadic.hpp"
#include "cvbell/gaussian.hpp"
#include "cvbell/phase_point.hpp"

namespace cvbell {

// Full term lists are materialized only up to this many parties (2^24 terms).
inline constexpr int kMaxExpansionParties = 24;

// One signed correlation in the Mermin-Klyshko combination. Bit i of the
// selector is set when party i (0-based) measures with its primed setting.
struct BellTerm {
  Dyadic coefficient;
  std::uint32_t selector = 0;
};

// coeffs[k] is the coefficient shared by every selector with exactly k primed
// parties.
struct ClassCoefficients {
  int n = 0;
  std::vector<Dyadic> coeffs;

  // coeffs[k] * C(n, k)
  Dyadic grouped(int k) const;
};

// Per-party (unprimed, primed) displacement settings.
class SettingsTable {
 public:
  explicit SettingsTable(std::vector<std::pair<Complex, Complex>> settings);

  // Unprimed 0, primed sqrt(J) e^{i phi_k}.
  static SettingsTable equal_magnitude(double j, const std::vector<double>& phases);
  // Unprimed 0, primed i sqrt(J) for every party.
  static SettingsTable imaginary(int n, double j);

  int parties() const noexcept { return static_cast<int>(settings_.size()); }
  const std::pair<Complex, Complex>& operator[](std::size_t i) const { return settings_[i]; }

  PhasePoint point_for(std::uint32_t selector) const;

 private:
  std::vector<std::pair<Complex, Complex>> settings_;
};

struct BellValue {
  double value = 0.0;
  int n = 0;
  // First-order bound on the rounding error of the signed sum.
  double cancellation_error = 0.0;
  // True when the sum was re-evaluated with >= 50 significant digits.
  bool extended_precision = false;
};

// Expands B_n = 1/2 (s_n + s_n') B_{n-1} + 1/2 (s_n - s_n') B'_{n-1} from the
// CHSH base case, B' being B with primed and unprimed settings swapped.
// Terms are returned in selector order with zero coefficients dropped.
// Throws CapacityExceeded for n > kMaxExpansionParties.
std::vector<BellTerm> mk_expand(int n);

// The same recursion on per-class coefficient vectors, O(n^2) exact
// operations, no upper limit on n. Both ways of reaching a class (party n
// primed or not) are computed and must agree.
ClassCoefficients class_coefficients(int n);

// Correlation when exactly k of n parties use displacement i sqrt(J) and the
// rest use 0: exp(-2J cosh(2r) k + 2J sinh(2r) (k - 2k^2/n)).
double pi_by_class(int n, double r, double j, int k);

// Evaluates the Mermin-Klyshko value for the standard settings (unprimed 0,
// primed i sqrt(J)) at any squeezing, and in the large-squeezing limit as a
// function of A = J e^{2r}. Coefficients are prepared once per n.
//
// Every per-class correlation has the form exp(a k + b k^2); the signed
// terms are summed in ascending magnitude with compensation. When the
// rounding bound exceeds 1e-8 of the result, or n > 100, the sum is redone
// in 50-digit arithmetic.
class EqualSettingsBell {
 public:
  explicit EqualSettingsBell(int n);

  int parties() const noexcept { return n_; }
  const ClassCoefficients& classes() const noexcept { return classes_; }

  BellValue at(double r, double j) const;
  BellValue asymptotic(double a) const;

 private:
  BellValue evaluate(double linear, double quadratic) const;
  BellValue evaluate_extended(const Extended& linear, const Extended& quadratic) const;

  int n_;
  ClassCoefficients classes_;
  std::vector<int> populated_;
  std::vector<double> grouped_;
  std::vector<Extended> grouped_extended_;
};

BellValue bell_value_equal_settings(int n, double r, double j);

// Large-squeezing limit: sum_k c[k] C(n, k) exp(-2 A k^2 / n).
BellValue bell_asymptotic(int n, double a);

// Sum over the full term list of coefficient * closed-form correlation at the
// selector's displacement vector.
BellValue bell_value_general(int n, double r, const SettingsTable& settings);
BellValue bell_value_general(const std::vector<BellTerm>& terms, int n, double r,
                             const SettingsTable& settings);

// Zero-squeezing closed form for n = 3 + 8M:
// 2^{(3-n)/2} (1 + e^{-4J})^{n/2} sin(n arctan(e^{-2J})).
BellValue bell_zero_squeezing(int n, double j);

}  // namespace cvbell
