#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace pjacobi {

/// Exact rational scalar used by the exact backing.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Exact value of a finite double (every finite double is a dyadic rational).
inline Rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("rat_from_double: non-finite value");
  return Rat(v);
}

/// Periods whose coefficients 2cos(2pi j/N) are all rational (in fact integers).
inline bool exact_cosine_period(int N) { return N == 1 || N == 2 || N == 3 || N == 4 || N == 6; }

/// 2cos(2pi j/N) for the rational periods.
inline int two_cos_integer(int j, int N) {
  j = ((j % N) + N) % N;
  switch (N) {
    case 1: return 2;
    case 2: return j == 0 ? 2 : -2;
    case 3: return j == 0 ? 2 : -1;
    case 4: return j == 0 ? 2 : (j == 2 ? -2 : 0);
    case 6:
      switch (j) {
        case 0: return 2;
        case 1:
        case 5: return 1;
        case 2:
        case 4: return -1;
        default: return -2;
      }
    default: throw std::invalid_argument("two_cos_integer: 2cos(2pi j/N) is irrational for this N");
  }
}

/// 2cos(2pi j/N) for the remaining periods, rationalized by rounding the
/// 50-digit value to denominator 2^110. The coefficient error is below 1e-33,
/// well inside the documented 1e-30 tolerance; identities verified over these
/// coefficients are asserted to <= 1e-20 residuals instead of exact zero.
inline Rat two_cos_dyadic(int j, int N) {
  namespace mp = boost::multiprecision;
  using F50 = mp::cpp_bin_float_50;
  j = ((j % N) + N) % N;
  const F50 pi = boost::math::constants::pi<F50>();
  const F50 value = 2 * cos(2 * pi * j / N);
  const BigInt den = BigInt(1) << 110;
  const BigInt num = round(value * F50(den)).convert_to<BigInt>();
  return Rat(num, den);
}

inline Rat two_cos_rational(int j, int N) {
  if (exact_cosine_period(N)) return Rat(two_cos_integer(j, N));
  return two_cos_dyadic(j, N);
}

}  // namespace pjacobi
