#include "liediam/numberfield.hpp"

namespace liediam {

NumberFieldCtx::NumberFieldCtx(IntVec monic_tail) : f(std::move(monic_tail)) {
  d = static_cast<int>(f.size());
  if (d < 1 || d > 3) fail(Errc::InvalidType, "number field degree must be 1, 2 or 3");
  if (d >= 2) {
    // irreducible over Q iff no rational root (degree <= 3); rational roots
    // of a monic integer polynomial are integers dividing the constant term
    BigInt c0 = big_abs(f[0]);
    if (c0 == 0) fail(Errc::NotIrreducible, "zero constant term");
    for (BigInt t = 1; t * t <= c0 || t <= 1; ++t) {
      if (c0 % t != 0) continue;
      for (const BigInt& div : {t, c0 / t}) {
        for (int sign : {1, -1}) {
          BigInt x = div * sign;
          BigInt acc = 1, val = 0;
          for (int i = 0; i < d; ++i) {
            val += f[i] * acc;
            acc *= x;
          }
          val += acc;
          if (val == 0) fail(Errc::NotIrreducible, "polynomial has integer root");
        }
      }
    }
  }
}

bool NumberFieldCtx::is_zero(const IntVec& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

IntVec NumberFieldCtx::add(const IntVec& a, const IntVec& b) const {
  IntVec r(d);
  for (int i = 0; i < d; ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec NumberFieldCtx::sub(const IntVec& a, const IntVec& b) const {
  IntVec r(d);
  for (int i = 0; i < d; ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec NumberFieldCtx::neg(const IntVec& a) const {
  IntVec r(d);
  for (int i = 0; i < d; ++i) r[i] = -a[i];
  return r;
}

IntVec NumberFieldCtx::scale(const BigInt& s, const IntVec& a) const {
  IntVec r(d);
  for (int i = 0; i < d; ++i) r[i] = s * a[i];
  return r;
}

IntVec NumberFieldCtx::mul(const IntVec& a, const IntVec& b) const {
  std::vector<BigInt> t(2 * d - 1, BigInt(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[i + j] += a[i] * b[j];
  for (int k = 2 * d - 2; k >= d; --k) {
    if (t[k] == 0) continue;
    for (int i = 0; i < d; ++i) t[k - d + i] -= t[k] * f[i];
    t[k] = 0;
  }
  IntVec r(d);
  for (int i = 0; i < d; ++i) r[i] = t[i];
  return r;
}

BigInt NumberFieldCtx::discriminant() const {
  if (d == 1) return 1;
  if (d == 2) {
    // x^2 + bx + c
    return f[1] * f[1] - 4 * f[0];
  }
  // x^3 + a x^2 + b x + c
  const BigInt &c = f[0], &b = f[1], &a = f[2];
  return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

bool NumberFieldCtx::is_inert(u64 p) const {
  if (d == 1) return false;
  if (discriminant() % BigInt(p) == 0) return false;
  FpCtx fp(p);
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 1, val = 0;
    for (int i = 0; i < d; ++i) {
      val = fp.add(val, fp.mul(mod_to_u64(f[i], p), acc));
      acc = fp.mul(acc, x);
    }
    if (fp.add(val, acc) == 0) return false;
  }
  return true;
}

GaloisAction GaloisAction::identity(const NumberFieldCtx& k) {
  GaloisAction g;
  g.d = k.d;
  g.order = 1;
  g.matrix = RationalMatrix::identity(k.d);
  return g;
}

GaloisAction GaloisAction::from_conjugate(const NumberFieldCtx& k, const RatVec& sigma_w, int order) {
  GaloisAction g;
  g.d = k.d;
  g.order = order;
  g.matrix = RationalMatrix(k.d, k.d);
  // column j = sigma(w)^j in the power basis, computed over Q by clearing to
  // a common denominator and using the integral multiplication
  BigInt den = 1;
  for (const auto& c : sigma_w) {
    BigInt q = denominator(c);
    den = den / big_gcd(den, q) * q;
  }
  IntVec num(k.d);
  for (int i = 0; i < k.d; ++i) num[i] = numerator(sigma_w[i]) * (den / denominator(sigma_w[i]));

  IntVec powv = k.one();
  BigInt powden = 1;
  for (int j = 0; j < k.d; ++j) {
    for (int i = 0; i < k.d; ++i) g.matrix.at(i, j) = BigRat(powv[i], powden);
    if (j + 1 < k.d) {
      powv = k.mul(powv, num);
      powden *= den;
    }
  }
  // check f(sigma(w)) = 0: evaluate with cleared denominators
  {
    IntVec acc = k.one();
    BigInt accden = 1;
    // value = sum f[i] * sigma_w^i + sigma_w^d, all over den^d
    IntVec val = k.zero();
    BigInt maxden = big_pow(den, static_cast<unsigned>(k.d));
    for (int i = 0; i <= k.d; ++i) {
      BigInt coef = (i < k.d) ? k.f[i] : BigInt(1);
      // scale acc (denominator accden) up to denominator maxden
      IntVec scaled = k.scale(coef * (maxden / accden), acc);
      val = k.add(val, scaled);
      if (i < k.d) {
        acc = k.mul(acc, num);
        accden *= den;
      }
    }
    if (!k.is_zero(val)) fail(Errc::SignConflict, "given conjugate does not satisfy f");
  }
  // check sigma^order = identity
  RationalMatrix m = g.matrix;
  RationalMatrix acc = g.matrix;
  for (int t = 1; t < order; ++t) {
    RationalMatrix next(k.d, k.d);
    for (int i = 0; i < k.d; ++i)
      for (int j = 0; j < k.d; ++j) {
        BigRat s = 0;
        for (int l = 0; l < k.d; ++l) s += m.at(i, l) * acc.at(l, j);
        next.at(i, j) = s;
      }
    acc = next;
  }
  for (int i = 0; i < k.d; ++i)
    for (int j = 0; j < k.d; ++j)
      if (acc.at(i, j) != BigRat(i == j ? 1 : 0))
        fail(Errc::OrderMismatch, "galois action does not have the stated order");
  return g;
}

GaloisAction GaloisAction::quadratic(const NumberFieldCtx& k) {
  if (k.d != 2) fail(Errc::InvalidType, "quadratic action requires degree 2");
  RatVec conj(2);
  conj[0] = BigRat(-k.f[1]);
  conj[1] = BigRat(-1);
  return from_conjugate(k, conj, 2);
}

RatVec GaloisAction::apply_rat(const RatVec& a) const {
  RatVec r(d, BigRat(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r[i] += matrix.at(i, j) * a[j];
  return r;
}

IntVec GaloisAction::apply(const IntVec& a) const {
  RatVec ra(d);
  for (int i = 0; i < d; ++i) ra[i] = BigRat(a[i]);
  RatVec rr = apply_rat(ra);
  IntVec r(d);
  for (int i = 0; i < d; ++i) {
    if (denominator(rr[i]) != 1) fail(Errc::NotFullRank, "galois image leaves Z[w]");
    r[i] = numerator(rr[i]);
  }
  return r;
}

NfReduction NfReduction::build(const NumberFieldCtx& k, u64 p) {
  if (!k.is_inert(p) && k.d > 1)
    fail(Errc::NotInert, "f mod " + std::to_string(p) + " is reducible or ramified");
  std::vector<u64> tail(k.d);
  for (int i = 0; i < k.d; ++i) tail[i] = mod_to_u64(k.f[i], p);
  return NfReduction{FqCtx(p, tail)};
}

FqElem NfReduction::reduce(const IntVec& a) const {
  FqElem e;
  for (int i = 0; i < field.d; ++i) e.c[i] = mod_to_u64(a[i], field.p());
  return e;
}

}  // namespace liediam
