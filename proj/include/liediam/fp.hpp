#pragma once

#include <cstdint>
#include <vector>

#include "liediam/error.hpp"

namespace liediam {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

/// The prime field F_p. Elements are reduced residues stored as u64.
struct FpCtx {
  u64 p;

  explicit FpCtx(u64 prime) : p(prime) {
    if (!is_prime_u64(prime)) fail(Errc::NotPrime, "modulus " + std::to_string(prime) + " is not prime");
  }

  u64 reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<u64>(r);
  }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a ? p - a : 0; }
  u64 mul(u64 a, u64 b) const { return mulmod_u64(a, b, p); }
  u64 inv(u64 a) const {
    if (a == 0) fail(Errc::ZeroElement, "inverse of zero in F_p");
    return powmod_u64(a, p - 2, p);
  }
  u64 pow(u64 a, u64 e) const { return powmod_u64(a, e, p); }
};

/// Ring trait for generic linear algebra over F_p.
struct FpRing {
  using Elem = u64;
  using Ctx = FpCtx;
  static Elem zero(const Ctx&) { return 0; }
  static Elem one(const Ctx&) { return 1; }
  static bool is_zero(const Ctx&, Elem a) { return a == 0; }
  static bool eq(const Ctx&, Elem a, Elem b) { return a == b; }
  static Elem add(const Ctx& c, Elem a, Elem b) { return c.add(a, b); }
  static Elem sub(const Ctx& c, Elem a, Elem b) { return c.sub(a, b); }
  static Elem neg(const Ctx& c, Elem a) { return c.neg(a); }
  static Elem mul(const Ctx& c, Elem a, Elem b) { return c.mul(a, b); }
  static Elem inv(const Ctx& c, Elem a) { return c.inv(a); }
  static Elem from_int(const Ctx& c, long long v) { return c.reduce(v); }
  static constexpr bool is_field = true;
};

/// Simple sieve of Eratosthenes; returns all primes <= bound.
std::vector<u64> primes_up_to(u64 bound);

}  // namespace liediam
