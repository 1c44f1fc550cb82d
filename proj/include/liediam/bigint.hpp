#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace liediam {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

inline BigInt numerator(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const BigRat& r) { return boost::multiprecision::denominator(r); }

/// Floor of a nonnegative rational; used for norm bookkeeping only.
inline BigInt big_pow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline std::uint64_t mod_to_u64(const BigInt& x, std::uint64_t p) {
  BigInt r = x % BigInt(p);
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<BigRat>;

}  // namespace liediam
