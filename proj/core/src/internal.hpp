#pragma once

#include <complex>

namespace ssli::internal {

// Repeated squaring; std::pow(complex, int) goes through exp/log.
template <typename T>
T ipow(T base, int exponent) {
  T result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace ssli::internal
