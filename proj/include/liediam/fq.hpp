#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "liediam/error.hpp"
#include "liediam/fp.hpp"

namespace liediam {

/// Element of F_{p^d}, d <= 3: coordinates in the power basis 1, x, x^2.
struct FqElem {
  std::array<u64, 3> c{0, 0, 0};

  friend bool operator==(const FqElem& a, const FqElem& b) { return a.c == b.c; }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
};

/// The field F_{p^d} = F_p[x]/(f), f monic of degree d in {1,2,3}.
///
/// Irreducibility is decided by root exhaustion over F_p, which is complete
/// for d <= 3. Degree 1 is accepted as the trivial extension and behaves as
/// F_p itself.
struct FqCtx {
  FpCtx base;
  int d = 1;
  // f = x^d + f[d-1] x^{d-1} + ... + f[0]; only the non-leading coefficients.
  std::array<u64, 3> f{0, 0, 0};

  FqCtx(u64 p, const std::vector<u64>& monic_tail);

  static FqCtx trivial(u64 p) { return FqCtx(p, {0}); }

  u64 p() const { return base.p; }
  /// Field size p^d as unsigned 128-bit (d <= 3 keeps this exact for p < 2^42).
  u128 order() const {
    u128 q = 1;
    for (int i = 0; i < d; ++i) q *= base.p;
    return q;
  }

  FqElem zero() const { return {}; }
  FqElem one() const {
    FqElem e;
    e.c[0] = 1 % base.p;
    return e;
  }
  FqElem from_base(u64 a) const {
    FqElem e;
    e.c[0] = a % base.p;
    return e;
  }
  FqElem gen() const {  // the class of x (= 1 in the trivial extension)
    FqElem e;
    if (d == 1)
      e.c[0] = 1 % base.p;
    else
      e.c[1] = 1;
    return e;
  }
  FqElem from_coeffs(const std::vector<u64>& cs) const {
    FqElem e;
    for (int i = 0; i < d && i < static_cast<int>(cs.size()); ++i) e.c[i] = cs[i] % base.p;
    return e;
  }

  bool is_zero(const FqElem& a) const { return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0; }

  FqElem add(const FqElem& a, const FqElem& b) const {
    FqElem r;
    for (int i = 0; i < d; ++i) r.c[i] = base.add(a.c[i], b.c[i]);
    return r;
  }
  FqElem sub(const FqElem& a, const FqElem& b) const {
    FqElem r;
    for (int i = 0; i < d; ++i) r.c[i] = base.sub(a.c[i], b.c[i]);
    return r;
  }
  FqElem neg(const FqElem& a) const {
    FqElem r;
    for (int i = 0; i < d; ++i) r.c[i] = base.neg(a.c[i]);
    return r;
  }
  FqElem scale(u64 s, const FqElem& a) const {
    FqElem r;
    for (int i = 0; i < d; ++i) r.c[i] = base.mul(s, a.c[i]);
    return r;
  }
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;
  FqElem pow(FqElem a, u128 e) const;

  /// x -> x^p, the Frobenius automorphism (F_p-linear, order d).
  FqElem frobenius(const FqElem& a) const { return pow(a, base.p); }

  std::string to_string(const FqElem& a) const;
};

/// Builds F_{p^d} from a monic polynomial given by its non-leading
/// coefficients (constant term first). Throws NotPrime / NotIrreducible.
FqCtx ext_field_build(u64 p, const std::vector<u64>& monic_tail);

/// Ring trait over F_q for the generic engines. Context is FqCtx.
struct FqRing {
  using Elem = FqElem;
  using Ctx = FqCtx;
  static Elem zero(const Ctx& c) { return c.zero(); }
  static Elem one(const Ctx& c) { return c.one(); }
  static bool is_zero(const Ctx& c, const Elem& a) { return c.is_zero(a); }
  static bool eq(const Ctx&, const Elem& a, const Elem& b) { return a == b; }
  static Elem add(const Ctx& c, const Elem& a, const Elem& b) { return c.add(a, b); }
  static Elem sub(const Ctx& c, const Elem& a, const Elem& b) { return c.sub(a, b); }
  static Elem neg(const Ctx& c, const Elem& a) { return c.neg(a); }
  static Elem mul(const Ctx& c, const Elem& a, const Elem& b) { return c.mul(a, b); }
  static Elem inv(const Ctx& c, const Elem& a) { return c.inv(a); }
  static Elem from_int(const Ctx& c, long long v) { return c.from_base(c.base.reduce(v)); }
  static constexpr bool is_field = true;
};

}  // namespace liediam
