#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace cvbell {

// Neumaier's variant of Kahan summation.
template <typename T>
class CompensatedSum {
 public:
  void add(const T& x) {
    using std::abs;
    const T t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  T value() const { return sum_ + compensation_; }

 private:
  T sum_{0};
  T compensation_{0};
};

// Sums terms in ascending order of magnitude; the order is fixed by the
// values alone, so results do not depend on how the terms were produced.
template <typename T>
T sum_ascending(std::vector<T> terms) {
  using std::abs;
  std::stable_sort(terms.begin(), terms.end(),
                   [](const T& a, const T& b) { return abs(a) < abs(b); });
  CompensatedSum<T> acc;
  for (const auto& t : terms) acc.add(t);
  return acc.value();
}

}  // namespace cvbell
