#pragma once

#include <vector>

#include "liediam/bigint.hpp"
#include "liediam/error.hpp"
#include "liediam/fq.hpp"
#include "liediam/ratmat.hpp"

namespace liediam {

/// The order Z[w] = Z[x]/(f), f monic irreducible over Z of degree d <= 3.
/// Elements are integer coordinate vectors in the power basis 1, w, w^2.
struct NumberFieldCtx {
  int d = 1;
  IntVec f;  // non-leading coefficients, constant term first

  NumberFieldCtx() = default;
  explicit NumberFieldCtx(IntVec monic_tail);

  IntVec zero() const { return IntVec(d, BigInt(0)); }
  IntVec one() const {
    IntVec v(d, BigInt(0));
    v[0] = 1;
    return v;
  }
  IntVec gen() const {
    IntVec v(d, BigInt(0));
    if (d == 1)
      v[0] = -f[0];
    else
      v[1] = 1;
    return v;
  }
  IntVec from_int(const BigInt& n) const {
    IntVec v(d, BigInt(0));
    v[0] = n;
    return v;
  }

  bool is_zero(const IntVec& a) const;
  IntVec add(const IntVec& a, const IntVec& b) const;
  IntVec sub(const IntVec& a, const IntVec& b) const;
  IntVec neg(const IntVec& a) const;
  IntVec mul(const IntVec& a, const IntVec& b) const;
  IntVec scale(const BigInt& s, const IntVec& a) const;

  /// disc(f) for d <= 3.
  BigInt discriminant() const;

  /// True when f mod p has no root in F_p (complete inertness test, d <= 3).
  bool is_inert(u64 p) const;
};

/// A generator sigma of a cyclic piece of Gal(E/Q), stored as its matrix on
/// the power basis. The matrix is rational in general; applying it to Z[w]
/// requires integrality of the result and is checked.
struct GaloisAction {
  int d = 1;
  int order = 1;
  RationalMatrix matrix;  // column j = coordinates of sigma(w^j)

  GaloisAction() = default;

  /// sigma = identity.
  static GaloisAction identity(const NumberFieldCtx& k);

  /// Constructs sigma from the coordinates of sigma(w); validates that
  /// f(sigma(w)) = 0, that sigma is a ring map, and that sigma^order = id.
  static GaloisAction from_conjugate(const NumberFieldCtx& k, const RatVec& sigma_w, int order);

  /// For quadratic fields the conjugate is forced: sigma(w) = -f[1] - w.
  static GaloisAction quadratic(const NumberFieldCtx& k);

  RatVec apply_rat(const RatVec& a) const;
  /// Applies sigma to an integral element; throws if the image is not in Z[w].
  IntVec apply(const IntVec& a) const;
};

/// Reduction Z[w] -> F_{p^d} sending w to the class of x, defined when
/// f mod p is irreducible (p inert). Throws NotInert otherwise.
struct NfReduction {
  FqCtx field;
  static NfReduction build(const NumberFieldCtx& k, u64 p);
  FqElem reduce(const IntVec& a) const;
};

}  // namespace liediam
