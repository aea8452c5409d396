#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace cvbell {

using BigInt = boost::multiprecision::cpp_int;
// At least 50 significant decimal digits.
using Extended = boost::multiprecision::cpp_bin_float_50;

// Exact rational num / 2^den_pow2, kept in lowest terms (num odd unless
// den_pow2 == 0; zero is 0 / 2^0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt num, unsigned den_pow2 = 0);  // NOLINT(google-explicit-constructor)

  const BigInt& num() const noexcept { return num_; }
  unsigned den_pow2() const noexcept { return den_pow2_; }

  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return num_.sign(); }

  Dyadic half() const;
  Dyadic abs() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const BigInt& b);
  friend Dyadic operator-(const Dyadic& a);
  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

  double to_double() const;
  Extended to_extended() const;
  std::string to_string() const;

 private:
  void normalize();

  BigInt num_ = 0;
  unsigned den_pow2_ = 0;
};

BigInt binomial(unsigned n, unsigned k);

}  // namespace cvbell
