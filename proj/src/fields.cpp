#include "liediam/fq.hpp"

#include <sstream>

namespace liediam {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> comp(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (u64 j = i * i; j <= bound; j += i) comp[j] = true;
    }
  }
  return out;
}

namespace {

u64 eval_poly(const FqCtx& k, u64 x) {
  // f(x) = x^d + f[d-1] x^{d-1} + ... + f[0] over F_p
  const FpCtx& fp = k.base;
  u64 acc = 1;
  u64 val = 0;
  u64 xs = x % fp.p;
  for (int i = 0; i < k.d; ++i) {
    val = fp.add(val, fp.mul(k.f[i], acc));
    acc = fp.mul(acc, xs);
  }
  return fp.add(val, acc);
}

}  // namespace

FqCtx::FqCtx(u64 p, const std::vector<u64>& monic_tail) : base(p) {
  d = static_cast<int>(monic_tail.size());
  if (d < 1 || d > 3) fail(Errc::InvalidType, "extension degree must be 1, 2 or 3");
  for (int i = 0; i < d; ++i) f[i] = monic_tail[i] % p;
  if (d >= 2) {
    for (u64 x = 0; x < p; ++x) {
      if (eval_poly(*this, x) == 0)
        fail(Errc::NotIrreducible,
             "modulus polynomial has root " + std::to_string(x) + " mod " + std::to_string(p));
    }
  }
}

FqCtx ext_field_build(u64 p, const std::vector<u64>& monic_tail) { return FqCtx(p, monic_tail); }

FqElem FqCtx::mul(const FqElem& a, const FqElem& b) const {
  const FpCtx& fp = base;
  if (d == 1) {
    FqElem r;
    r.c[0] = fp.mul(a.c[0], b.c[0]);
    return r;
  }
  // schoolbook product, degree <= 4
  std::array<u64, 5> t{0, 0, 0, 0, 0};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[i + j] = fp.add(t[i + j], fp.mul(a.c[i], b.c[j]));
  // reduce by x^d = -(f[d-1] x^{d-1} + ... + f[0])
  for (int k = 2 * d - 2; k >= d; --k) {
    u64 lead = t[k];
    if (lead == 0) continue;
    t[k] = 0;
    for (int i = 0; i < d; ++i) t[k - d + i] = fp.sub(t[k - d + i], fp.mul(lead, f[i]));
  }
  FqElem r;
  for (int i = 0; i < d; ++i) r.c[i] = t[i];
  return r;
}

FqElem FqCtx::pow(FqElem a, u128 e) const {
  FqElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqElem FqCtx::inv(const FqElem& a) const {
  if (is_zero(a)) fail(Errc::ZeroElement, "inverse of zero in F_q");
  return pow(a, order() - 2);
}

std::string FqCtx::to_string(const FqElem& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < d; ++i) os << (i ? "," : "") << a.c[i];
  os << "]";
  return os.str();
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotInert: return "NotInert";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotASymmetry: return "NotASymmetry";
    case Errc::SignConflict: return "SignConflict";
    case Errc::InvalidType: return "InvalidType";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::CharTooSmall: return "CharTooSmall";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::CutoffExceeded: return "CutoffExceeded";
    case Errc::NotFullRank: return "NotFullRank";
    case Errc::PrimeTooSmall: return "PrimeTooSmall";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotDecomposable: return "NotDecomposable";
    case Errc::PipelineStall: return "PipelineStall";
    case Errc::LineNotFull: return "LineNotFull";
    case Errc::DegreeNotDividing: return "DegreeNotDividing";
    case Errc::InsufficientPrimes: return "InsufficientPrimes";
    case Errc::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace liediam
