#include "cvbell/dyadic.hpp"

#include <cmath>

namespace cvbell {

Dyadic::Dyadic(BigInt num, unsigned den_pow2) : num_(std::move(num)), den_pow2_(den_pow2) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    den_pow2_ = 0;
    return;
  }
  while (den_pow2_ > 0 && !boost::multiprecision::bit_test(num_, 0)) {
    num_ >>= 1;
    --den_pow2_;
  }
}

Dyadic Dyadic::half() const {
  if (num_ == 0) return {};
  return Dyadic(num_, den_pow2_ + 1);
}

Dyadic Dyadic::abs() const { return Dyadic(boost::multiprecision::abs(num_), den_pow2_); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned den = std::max(a.den_pow2_, b.den_pow2_);
  BigInt lhs = a.num_ << (den - a.den_pow2_);
  BigInt rhs = b.num_ << (den - b.den_pow2_);
  return Dyadic(lhs + rhs, den);
}

Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num_, a.den_pow2_); }

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const BigInt& b) { return Dyadic(a.num_ * b, a.den_pow2_); }

double Dyadic::to_double() const {
  return std::ldexp(num_.convert_to<double>(), -static_cast<int>(den_pow2_));
}

Extended Dyadic::to_extended() const {
  return ldexp(Extended(num_), -static_cast<int>(den_pow2_));
}

std::string Dyadic::to_string() const {
  if (den_pow2_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(den_pow2_);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace cvbell
