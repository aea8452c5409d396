#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvbell {

// Bad input: out-of-range index, wrong dimension, precondition violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A factorization or evaluation could not produce a trustworthy number.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a size limit (term-list capacity, Fock cutoff, memory budget).
// required() carries a hint such as the cutoff that would have sufficed, or 0.
class CapacityExceeded : public std::length_error {
 public:
  explicit CapacityExceeded(const std::string& what, std::size_t required = 0)
      : std::length_error(what), required_(required) {}

  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

}  // namespace cvbell
