#include "cvbell/bell.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cvbell/errors.hpp"
#include "cvbell/parity.hpp"
#include "cvbell/summation.hpp"

namespace cvbell {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kExtendedTrigger = 1e-8;
constexpr int kAlwaysExtendedAbove = 100;

void require_parties(int n, const char* what) {
  if (n < 2) {
    throw InvalidArgument(std::string(what) + ": party count must be >= 2, got " +
                          std::to_string(n));
  }
}

void require_displacement(double j, const char* what) {
  if (!(j >= 0.0) || !std::isfinite(j)) {
    throw InvalidArgument(std::string(what) + ": displacement parameter must be finite and >= 0");
  }
}

void require_squeezing(double r, const char* what) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw InvalidArgument(std::string(what) + ": squeezing must be finite and >= 0");
  }
}

}  // namespace

Dyadic ClassCoefficients::grouped(int k) const {
  return coeffs.at(static_cast<std::size_t>(k)) *
         binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

SettingsTable::SettingsTable(std::vector<std::pair<Complex, Complex>> settings)
    : settings_(std::move(settings)) {
  if (settings_.size() < 2) throw InvalidArgument("SettingsTable: at least two parties required");
  for (const auto& [plain, primed] : settings_) {
    if (!std::isfinite(plain.real()) || !std::isfinite(plain.imag()) ||
        !std::isfinite(primed.real()) || !std::isfinite(primed.imag())) {
      throw InvalidArgument("SettingsTable: displacements must be finite");
    }
  }
}

SettingsTable SettingsTable::equal_magnitude(double j, const std::vector<double>& phases) {
  require_displacement(j, "SettingsTable::equal_magnitude");
  std::vector<std::pair<Complex, Complex>> s;
  s.reserve(phases.size());
  for (double phi : phases) s.emplace_back(Complex{}, std::polar(std::sqrt(j), phi));
  return SettingsTable(std::move(s));
}

SettingsTable SettingsTable::imaginary(int n, double j) {
  require_parties(n, "SettingsTable::imaginary");
  require_displacement(j, "SettingsTable::imaginary");
  return SettingsTable(std::vector<std::pair<Complex, Complex>>(
      static_cast<std::size_t>(n), {Complex{}, Complex{0.0, std::sqrt(j)}}));
}

PhasePoint SettingsTable::point_for(std::uint32_t selector) const {
  std::vector<Complex> alphas(settings_.size());
  for (std::size_t i = 0; i < settings_.size(); ++i) {
    alphas[i] = (selector >> i) & 1U ? settings_[i].second : settings_[i].first;
  }
  return PhasePoint(std::move(alphas));
}

std::vector<BellTerm> mk_expand(int n) {
  require_parties(n, "mk_expand");
  if (n > kMaxExpansionParties) {
    throw CapacityExceeded("mk_expand: " + std::to_string(n) + " parties exceeds the term-list limit of " +
                               std::to_string(kMaxExpansionParties) + "; use class_coefficients",
                           static_cast<std::size_t>(kMaxExpansionParties));
  }
  // Level m holds B_m * 2^{m-2}, which has integer coefficients.
  std::vector<std::int64_t> scaled{1, 1, 1, -1};
  for (int m = 3; m <= n; ++m) {
    const std::uint32_t mask = (1U << (m - 1)) - 1U;
    std::vector<std::int64_t> next(std::size_t{1} << m);
    for (std::uint32_t s = 0; s <= mask; ++s) {
      const std::int64_t same = scaled[s];
      const std::int64_t swapped = scaled[s ^ mask];
      next[s] = same + swapped;
      next[s | (1U << (m - 1))] = same - swapped;
    }
    scaled = std::move(next);
  }
  std::vector<BellTerm> terms;
  for (std::uint32_t s = 0; s < scaled.size(); ++s) {
    if (scaled[s] != 0) terms.push_back({Dyadic(scaled[s], static_cast<unsigned>(n - 2)), s});
  }
  return terms;
}

ClassCoefficients class_coefficients(int n) {
  require_parties(n, "class_coefficients");
  std::vector<Dyadic> c{Dyadic(1), Dyadic(1), Dyadic(-1)};
  for (int m = 3; m <= n; ++m) {
    std::vector<Dyadic> next(static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k) {
      // Party m unprimed: k primes among the first m-1, swapped branch has m-1-k.
      // Party m primed: k-1 primes among the first m-1, swapped branch has m-k.
      if (k <= m - 1) next[k] = (c[k] + c[m - 1 - k]).half();
      if (k >= 1) {
        const Dyadic primed = (c[k - 1] - c[m - k]).half();
        if (k <= m - 1 && !(primed == next[k])) {
          throw NumericFailure("class_coefficients: recursion lost permutation symmetry at n=" +
                               std::to_string(m) + ", k=" + std::to_string(k));
        }
        next[k] = primed;
      }
    }
    c = std::move(next);
  }
  return ClassCoefficients{n, std::move(c)};
}

double pi_by_class(int n, double r, double j, int k) {
  require_parties(n, "pi_by_class");
  require_squeezing(r, "pi_by_class");
  require_displacement(j, "pi_by_class");
  if (k < 0 || k > n) throw InvalidArgument("pi_by_class: primed count out of range");
  // -2J cosh(2r) k + 2J sinh(2r) k = -2J e^{-2r} k
  const double linear = -2.0 * j * std::exp(-2.0 * r);
  const double quadratic = -4.0 * j * std::sinh(2.0 * r) / n;
  const double kk = static_cast<double>(k);
  return std::exp(linear * kk + quadratic * kk * kk);
}

EqualSettingsBell::EqualSettingsBell(int n) : n_(n), classes_(class_coefficients(n)) {
  for (int k = 0; k <= n; ++k) {
    if (classes_.coeffs[k].is_zero()) continue;
    const Dyadic g = classes_.grouped(k);
    populated_.push_back(k);
    grouped_.push_back(g.to_double());
    grouped_extended_.push_back(g.to_extended());
  }
}

BellValue EqualSettingsBell::evaluate(double linear, double quadratic) const {
  std::vector<double> terms;
  terms.reserve(populated_.size());
  double magnitude = 0.0;
  for (std::size_t i = 0; i < populated_.size(); ++i) {
    const double k = populated_[i];
    const double exponent_scale = std::abs(linear) * k + std::abs(quadratic) * k * k;
    const double t = grouped_[i] * std::exp(linear * k + quadratic * k * k);
    terms.push_back(t);
    magnitude += std::abs(t) * (3.0 + 2.0 * exponent_scale);
  }
  const double value = sum_ascending(std::move(terms));
  return BellValue{value, n_, kUnitRoundoff * (magnitude + std::abs(value)), false};
}

BellValue EqualSettingsBell::evaluate_extended(const Extended& linear,
                                               const Extended& quadratic) const {
  using boost::multiprecision::abs;
  using boost::multiprecision::exp;
  const Extended u = std::numeric_limits<Extended>::epsilon();
  // exp(a k + b k^2) by the ratio recurrence E_{k+1} = E_k exp(a + b (2k + 1)).
  Extended power = 1;
  Extended ratio = exp(linear + quadratic);
  const Extended ratio_step = exp(2 * quadratic);
  std::vector<Extended> terms;
  terms.reserve(populated_.size());
  Extended magnitude = 0;
  std::size_t next = 0;
  for (int k = 0; k <= n_ && next < populated_.size(); ++k) {
    if (populated_[next] == k) {
      const Extended t = grouped_extended_[next] * power;
      const Extended scale = abs(linear) * k + abs(quadratic) * k * k;
      magnitude += abs(t) * (6 + 3 * k + 2 * scale);
      terms.push_back(t);
      ++next;
    }
    power *= ratio;
    ratio *= ratio_step;
  }
  const Extended value = sum_ascending(std::move(terms));
  const Extended error = u * (magnitude + abs(value));
  return BellValue{value.convert_to<double>(), n_, error.convert_to<double>(), true};
}

BellValue EqualSettingsBell::at(double r, double j) const {
  require_squeezing(r, "bell_value_equal_settings");
  require_displacement(j, "bell_value_equal_settings");
  const double n = static_cast<double>(n_);
  if (n_ <= kAlwaysExtendedAbove) {
    BellValue v = evaluate(-2.0 * j * std::exp(-2.0 * r), -4.0 * j * std::sinh(2.0 * r) / n);
    if (v.cancellation_error <= kExtendedTrigger * std::abs(v.value)) return v;
  }
  const Extended re(r);
  const Extended je(j);
  return evaluate_extended(-2 * je * boost::multiprecision::exp(-2 * re),
                           -4 * je * boost::multiprecision::sinh(2 * re) / n_);
}

BellValue EqualSettingsBell::asymptotic(double a) const {
  require_displacement(a, "bell_asymptotic");
  if (n_ <= kAlwaysExtendedAbove) {
    BellValue v = evaluate(0.0, -2.0 * a / n_);
    if (v.cancellation_error <= kExtendedTrigger * std::abs(v.value)) return v;
  }
  return evaluate_extended(Extended(0), -2 * Extended(a) / n_);
}

BellValue bell_value_equal_settings(int n, double r, double j) {
  return EqualSettingsBell(n).at(r, j);
}

BellValue bell_asymptotic(int n, double a) { return EqualSettingsBell(n).asymptotic(a); }

BellValue bell_value_general(int n, double r, const SettingsTable& settings) {
  return bell_value_general(mk_expand(n), n, r, settings);
}

BellValue bell_value_general(const std::vector<BellTerm>& terms, int n, double r,
                             const SettingsTable& settings) {
  require_parties(n, "bell_value_general");
  if (n > kMaxExpansionParties) {
    throw CapacityExceeded("bell_value_general: too many parties for a full term list",
                           static_cast<std::size_t>(kMaxExpansionParties));
  }
  if (settings.parties() != n) throw InvalidArgument("bell_value_general: settings size != n");
  const Squeezing squeeze(r);
  const double weight = 2.0 * std::cosh(2.0 * r) + 6.0 * std::sinh(2.0 * r);
  std::vector<double> values;
  values.reserve(terms.size());
  double magnitude = 0.0;
  for (const auto& term : terms) {
    const PhasePoint point = settings.point_for(term.selector);
    double norm2 = 0.0;
    for (const auto& a : point.alphas()) norm2 += std::norm(a);
    const double t = term.coefficient.to_double() * std::exp(pi_log_closed_form(n, squeeze, point));
    values.push_back(t);
    magnitude += std::abs(t) * (3.0 + 2.0 * n * weight * norm2);
  }
  const double value = sum_ascending(std::move(values));
  return BellValue{value, n, kUnitRoundoff * (magnitude + std::abs(value)), false};
}

BellValue bell_zero_squeezing(int n, double j) {
  require_displacement(j, "bell_zero_squeezing");
  if (n < 3 || n % 8 != 3) {
    throw InvalidArgument("bell_zero_squeezing: closed form holds for n = 3 + 8M, got " +
                          std::to_string(n) + "; use bell_value_equal_settings at r = 0");
  }
  const double dn = static_cast<double>(n);
  const double log_envelope =
      0.5 * (3.0 - dn) * std::numbers::ln2 + 0.5 * dn * std::log1p(std::exp(-4.0 * j));
  const double envelope = std::exp(log_envelope);
  const double value = envelope * std::sin(dn * std::atan(std::exp(-2.0 * j)));
  return BellValue{value, n, kUnitRoundoff * envelope * (4.0 + 2.0 * dn), false};
}

}  // namespace cvbell
