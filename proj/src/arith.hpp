#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fanohyp {

// All dimensions, ranks and genus-bound coefficients are exact: no floating
// point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long long n, long long k) {
  if (k < 0) return 0;
  Int num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  return num / den;
}

}  // namespace fanohyp
