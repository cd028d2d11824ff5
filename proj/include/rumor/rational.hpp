#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rumor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // divides exactly: r is C(n-k+i, i) after each step
  }
  return r;
}

inline BigInt int_pow(BigInt base, int e) {
  BigInt r = 1;
  for (; e > 0; --e) r *= base;
  return r;
}

}  // namespace rumor
