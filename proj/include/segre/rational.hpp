#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace segre {

// Exact arithmetic everywhere: arbitrary-precision integers and
// normalized fractions. No floating point in the whole library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) with the usual convention: zero for k < 0 or k > n (n >= 0).
inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace segre
