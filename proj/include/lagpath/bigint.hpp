#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lagpath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::strong_ordering compare(const BigInt& l, const BigInt& r) {
  const int c = l.compare(r);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt s = isqrt(n);
  if (root) *root = s;
  return s * s == n;
}

inline BigInt pow2(unsigned exponent) {
  BigInt out = 1;
  out <<= exponent;
  return out;
}

}  // namespace lagpath
