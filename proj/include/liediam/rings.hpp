#pragma once

#include "liediam/bigint.hpp"
#include "liediam/error.hpp"

namespace liediam {

/// Exact rationals as a coefficient field.
struct RatRing {
  using Elem = BigRat;
  struct Ctx {};
  static Elem zero(const Ctx&) { return BigRat(0); }
  static Elem one(const Ctx&) { return BigRat(1); }
  static bool is_zero(const Ctx&, const Elem& a) { return a == 0; }
  static bool eq(const Ctx&, const Elem& a, const Elem& b) { return a == b; }
  static Elem add(const Ctx&, const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Ctx&, const Elem& a, const Elem& b) { return a - b; }
  static Elem neg(const Ctx&, const Elem& a) { return -a; }
  static Elem mul(const Ctx&, const Elem& a, const Elem& b) { return a * b; }
  static Elem inv(const Ctx&, const Elem& a) {
    if (a == 0) fail(Errc::ZeroElement, "inverse of zero rational");
    return BigRat(1) / a;
  }
  static Elem from_int(const Ctx&, long long v) { return BigRat(v); }
  static constexpr bool is_field = true;
};

/// Exact integers as a coefficient ring (no division).
struct IntRing {
  using Elem = BigInt;
  struct Ctx {};
  static Elem zero(const Ctx&) { return BigInt(0); }
  static Elem one(const Ctx&) { return BigInt(1); }
  static bool is_zero(const Ctx&, const Elem& a) { return a == 0; }
  static bool eq(const Ctx&, const Elem& a, const Elem& b) { return a == b; }
  static Elem add(const Ctx&, const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Ctx&, const Elem& a, const Elem& b) { return a - b; }
  static Elem neg(const Ctx&, const Elem& a) { return -a; }
  static Elem mul(const Ctx&, const Elem& a, const Elem& b) { return a * b; }
  static Elem from_int(const Ctx&, long long v) { return BigInt(v); }
  static constexpr bool is_field = false;
};

}  // namespace liediam
