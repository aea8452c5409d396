#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerical code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;

// Wigner exponent of the N-mode GHZ state written exactly as the literal
// bracket expression, double sums over all ordered pairs. Returns E with
// W = (2/pi)^N exp(-E).
inline double ghz_exponent(const std::vector<double>& x, const std::vector<double>& p, double r) {
  const std::size_t n = x.size();
  const double nn = static_cast<double>(n);
  double sx = 0, sp = 0, dx = 0, dp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sp += p[i];
    for (std::size_t j = 0; j < n; ++j) {
      dx += (x[i] - x[j]) * (x[i] - x[j]);
      dp += (p[i] - p[j]) * (p[i] - p[j]);
    }
  }
  return std::exp(-2 * r) * (2 / nn * sx * sx + dp / nn) +
         std::exp(2 * r) * (2 / nn * sp * sp + dx / nn);
}

inline double ghz_exponent(const Eigen::VectorXd& v, double r) {
  const auto n = v.size() / 2;
  std::vector<double> x(n), p(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x[i] = v(2 * i);
    p[i] = v(2 * i + 1);
  }
  return ghz_exponent(x, p, r);
}

// Polarization of the quadratic exponent into a symmetric matrix M with
// E(v) = v^T M v, interleaved ordering.
inline Eigen::MatrixXd ghz_matrix(int n, double r) {
  const int d = 2 * n;
  Eigen::MatrixXd m(d, d);
  auto unit = [&](int a) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    e(a) = 1;
    return e;
  };
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const double both = ghz_exponent(unit(a) + unit(b), r);
      m(a, b) = 0.5 * (both - ghz_exponent(unit(a), r) - ghz_exponent(unit(b), r));
    }
  }
  return m;
}

// Correlation exponent in complex arithmetic, straight from the formula with
// the double sum over every (i, j). Returns the full complex exponent so the
// caller can inspect the imaginary residue.
inline Complex parity_exponent(const std::vector<Complex>& a, double r) {
  const double nn = static_cast<double>(a.size());
  Complex norm2 = 0, pair = 0, single = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    norm2 += a[i] * std::conj(a[i]);
    single += a[i] * a[i] + std::conj(a[i]) * std::conj(a[i]);
    for (std::size_t j = 0; j < a.size(); ++j) {
      pair += a[i] * a[j] + std::conj(a[i]) * std::conj(a[j]);
    }
  }
  return -2 * std::cosh(2 * r) * norm2 + std::sinh(2 * r) * (2 / nn * pair - single);
}

// Mermin-Klyshko polynomial evaluated on +-1 outcomes. u[i] is party i's
// unprimed outcome, v[i] the primed one. Returns (B, B').
inline std::pair<double, double> mk_value(const std::vector<int>& u, const std::vector<int>& v,
                                          int parties) {
  if (parties == 2) {
    const double b = u[0] * u[1] + v[0] * u[1] + u[0] * v[1] - v[0] * v[1];
    const double bp = v[0] * v[1] + u[0] * v[1] + v[0] * u[1] - u[0] * u[1];
    return {b, bp};
  }
  const auto [b, bp] = mk_value(u, v, parties - 1);
  const double a = u[parties - 1], ap = v[parties - 1];
  return {0.5 * (a + ap) * b + 0.5 * (a - ap) * bp, 0.5 * (ap + a) * bp + 0.5 * (ap - a) * b};
}

// Multilinear coefficients of the MK polynomial by a Walsh-Hadamard
// transform over all 2^(2n) outcome assignments. Bit 2i of a monomial index
// is u_i, bit 2i+1 is v_i. Also reports whether every assignment gives +-2.
struct WalshExpansion {
  std::vector<double> coefficients;
  bool all_values_pm2 = true;
};

inline WalshExpansion mk_walsh(int n) {
  const std::size_t size = std::size_t{1} << (2 * n);
  WalshExpansion out;
  out.coefficients.resize(size);
  std::vector<int> u(n), v(n);
  for (std::size_t x = 0; x < size; ++x) {
    for (int i = 0; i < n; ++i) {
      u[i] = (x >> (2 * i)) & 1 ? -1 : 1;
      v[i] = (x >> (2 * i + 1)) & 1 ? -1 : 1;
    }
    const double b = mk_value(u, v, n).first;
    if (std::abs(std::abs(b) - 2.0) > 1e-12) out.all_values_pm2 = false;
    out.coefficients[x] = b;
  }
  auto& f = out.coefficients;
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t i = 0; i < size; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = f[j], b = f[j + len];
        f[j] = a + b;
        f[j + len] = a - b;
      }
    }
  }
  for (auto& c : f) c /= static_cast<double>(size);
  return out;
}

// Monomial index for a selector (bit i set means party i primed).
inline std::size_t monomial_for(std::uint32_t selector, int n) {
  std::size_t m = 0;
  for (int i = 0; i < n; ++i) m |= std::size_t{1} << (2 * i + ((selector >> i) & 1));
  return m;
}

// Per-selector coefficient for odd n from the four closed-form residue
// classes of n mod 8; k is the number of primed parties.
inline double odd_class_coefficient(int n, int k) {
  const double scale = std::pow(2.0, (3.0 - n) / 2.0);
  const int half = k / 2;
  const double alt = half % 2 == 0 ? 1.0 : -1.0;
  switch (n % 8) {
    case 3: return k % 2 == 1 ? alt * scale : 0.0;
    case 5: return k % 2 == 0 ? -alt * scale : 0.0;
    case 7: return k % 2 == 1 ? -alt * scale : 0.0;
    case 1: return k % 2 == 0 ? alt * scale : 0.0;
    default: return NAN;
  }
}

// Closed-form small-n values with primed setting i sqrt(J), unprimed 0.
inline double bell2(double r, double j) {
  return 1 + 2 * std::exp(-2 * j * std::cosh(2 * r)) - std::exp(-4 * j * std::exp(2 * r));
}
inline double bell3(double r, double j) {
  return 3 * std::exp(-2 * j * std::cosh(2 * r) + 2 * j * std::sinh(2 * r) / 3) -
         std::exp(-6 * j * std::exp(2 * r));
}
inline double bell4(double r, double j) {
  const double c = std::cosh(2 * r), s = std::sinh(2 * r);
  return 2 * std::exp(-2 * j * c + j * s) - 2 * std::exp(-6 * j * c - 3 * j * s) +
         3 * std::exp(-4 * j * c) - 0.5 * std::exp(-8 * j * std::exp(2 * r)) - 0.5;
}
inline double bell5(double r, double j) {
  const double c = std::cosh(2 * r), s = std::sinh(2 * r);
  return 5 * std::exp(-4 * j * c + 4 * j * s / 5) - 2.5 * std::exp(-8 * j * c - 24 * j * s / 5) -
         0.5;
}

inline double binomial(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace oracle
