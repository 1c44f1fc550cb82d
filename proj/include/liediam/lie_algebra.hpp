#pragma once

#include <random>
#include <string>
#include <vector>

#include "liediam/error.hpp"
#include "liediam/linalg.hpp"

namespace liediam {

/// Lie algebra over a coefficient ring R, given by sparse structure
/// constants. Only pairs (i, j) with i < j are stored; the rest follows by
/// antisymmetry. Immutable after construction.
template <class R>
class LieAlgebra {
 public:
  using Elem = typename R::Elem;
  using Vec = std::vector<Elem>;
  struct Term {
    int k;
    Elem c;
  };
  struct PairEntry {
    int i, j;
    std::vector<Term> terms;
  };

  LieAlgebra(typename R::Ctx ctx, int dim, std::vector<std::string> labels)
      : ctx_(std::move(ctx)), dim_(dim), labels_(std::move(labels)) {}

  /// Adds c * e_k to [e_i, e_j]; requires i < j. Construction-time only.
  void add_constant(int i, int j, int k, Elem c) {
    if (R::is_zero(ctx_, c)) return;
    for (auto& pe : pairs_) {
      if (pe.i == i && pe.j == j) {
        for (auto& t : pe.terms) {
          if (t.k == k) {
            t.c = R::add(ctx_, t.c, c);
            return;
          }
        }
        pe.terms.push_back({k, std::move(c)});
        return;
      }
    }
    pairs_.push_back({i, j, {{k, std::move(c)}}});
  }

  /// Builds the per-row adjacency index; call once after all constants.
  void finalize() {
    // drop zero terms
    std::vector<PairEntry> kept;
    for (auto& pe : pairs_) {
      std::vector<Term> t;
      for (auto& term : pe.terms)
        if (!R::is_zero(ctx_, term.c)) t.push_back(term);
      if (!t.empty()) kept.push_back({pe.i, pe.j, std::move(t)});
    }
    pairs_ = std::move(kept);
    adj_.assign(dim_, {});
    for (size_t idx = 0; idx < pairs_.size(); ++idx) {
      adj_[pairs_[idx].i].push_back({static_cast<int>(idx), false});
      adj_[pairs_[idx].j].push_back({static_cast<int>(idx), true});
    }
  }

  const typename R::Ctx& ctx() const { return ctx_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<PairEntry>& pairs() const { return pairs_; }

  Vec zero_vec() const { return Vec(dim_, R::zero(ctx_)); }
  Vec basis_vec(int i) const {
    Vec v = zero_vec();
    v[i] = R::one(ctx_);
    return v;
  }
  bool is_zero_vec(const Vec& v) const {
    for (const auto& c : v)
      if (!R::is_zero(ctx_, c)) return false;
    return true;
  }
  bool eq_vec(const Vec& a, const Vec& b) const {
    for (int i = 0; i < dim_; ++i)
      if (!R::eq(ctx_, a[i], b[i])) return false;
    return true;
  }

  Vec add_vec(const Vec& a, const Vec& b) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = R::add(ctx_, a[i], b[i]);
    return r;
  }
  Vec sub_vec(const Vec& a, const Vec& b) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = R::sub(ctx_, a[i], b[i]);
    return r;
  }
  Vec scale_vec(const Elem& s, const Vec& a) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = R::mul(ctx_, s, a[i]);
    return r;
  }

  /// [x, y], bilinear and antisymmetric.
  Vec bracket(const Vec& x, const Vec& y) const {
    Vec z = zero_vec();
    for (const auto& pe : pairs_) {
      Elem coef = R::sub(ctx_, R::mul(ctx_, x[pe.i], y[pe.j]), R::mul(ctx_, x[pe.j], y[pe.i]));
      if (R::is_zero(ctx_, coef)) continue;
      for (const auto& t : pe.terms) z[t.k] = R::add(ctx_, z[t.k], R::mul(ctx_, t.c, coef));
    }
    return z;
  }

  /// [e_i, y] using the row index (faster than a full bracket).
  Vec bracket_basis(int i, const Vec& y) const {
    Vec z = zero_vec();
    for (const auto& [idx, flipped] : adj_[i]) {
      const auto& pe = pairs_[idx];
      Elem coef = flipped ? R::neg(ctx_, y[pe.i]) : y[pe.j];
      if (R::is_zero(ctx_, coef)) continue;
      for (const auto& t : pe.terms) z[t.k] = R::add(ctx_, z[t.k], R::mul(ctx_, t.c, coef));
    }
    return z;
  }

  /// Dense matrix of ad_x acting on coordinate vectors.
  DenseMatrix<R> ad_matrix(const Vec& x) const {
    DenseMatrix<R> m(ctx_, dim_, dim_);
    for (const auto& pe : pairs_) {
      // column j gets x_i * c e_k, column i gets -x_j * c e_k
      if (!R::is_zero(ctx_, x[pe.i]))
        for (const auto& t : pe.terms)
          m.at(t.k, pe.j) = R::add(ctx_, m.at(t.k, pe.j), R::mul(ctx_, x[pe.i], t.c));
      if (!R::is_zero(ctx_, x[pe.j]))
        for (const auto& t : pe.terms)
          m.at(t.k, pe.i) = R::sub(ctx_, m.at(t.k, pe.i), R::mul(ctx_, x[pe.j], t.c));
    }
    return m;
  }

  /// Verifies the Jacobi identity on basis triples: all of them when
  /// dim <= full_dim_limit, otherwise `samples` random triples.
  void verify_jacobi(int full_dim_limit = 60, int samples = 10000, u64 seed = 1) const {
    auto check = [&](int i, int j, int k) {
      Vec a = bracket_basis(i, bracket_basis(j, basis_vec(k)));
      Vec b = bracket_basis(j, bracket_basis(k, basis_vec(i)));
      Vec c = bracket_basis(k, bracket_basis(i, basis_vec(j)));
      Vec s = add_vec(add_vec(a, b), c);
      if (!is_zero_vec(s))
        fail(Errc::SignConflict, "Jacobi identity fails on basis triple (" + std::to_string(i) +
                                     "," + std::to_string(j) + "," + std::to_string(k) + ")");
    };
    if (dim_ <= full_dim_limit) {
      for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
          for (int k = j + 1; k < dim_; ++k) check(i, j, k);
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> pick(0, dim_ - 1);
      for (int t = 0; t < samples; ++t) check(pick(rng), pick(rng), pick(rng));
    }
  }

 private:
  typename R::Ctx ctx_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<PairEntry> pairs_;
  std::vector<std::vector<std::pair<int, bool>>> adj_;
};

/// Smallest subspace containing S and closed under bracket, as an echelon
/// basis. Requires a field ring.
template <class R>
EchelonBasis<R> subalgebra_closure(const LieAlgebra<R>& g,
                                   const std::vector<typename LieAlgebra<R>::Vec>& gens) {
  EchelonBasis<R> span(g.ctx(), g.dim());
  std::vector<typename LieAlgebra<R>::Vec> members;
  for (const auto& v : gens)
    if (span.insert(v)) members.push_back(v);
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      auto br = g.bracket(members[i], members[j]);
      if (span.insert(br)) members.push_back(br);
      if (span.dim() == g.dim()) return span;
    }
  }
  return span;
}

/// Ideal generated by a single vector: closure of span{v} under bracketing
/// with all basis vectors.
template <class R>
EchelonBasis<R> ideal_closure(const LieAlgebra<R>& g, const typename LieAlgebra<R>::Vec& v) {
  EchelonBasis<R> span(g.ctx(), g.dim());
  std::vector<typename LieAlgebra<R>::Vec> work;
  if (span.insert(v)) work.push_back(v);
  for (size_t i = 0; i < work.size(); ++i) {
    for (int b = 0; b < g.dim(); ++b) {
      auto br = g.bracket_basis(b, work[i]);
      if (span.insert(br)) work.push_back(br);
      if (span.dim() == g.dim()) return span;
    }
  }
  return span;
}

struct SimplicityVerdict {
  bool probably_simple = true;
  int witness_ideal_dim = -1;                 // proper ideal dimension when found
  std::vector<std::vector<u64>> witness_gen;  // unused marker; see report
};

/// Monte Carlo single-vector-ideal simplicity test. A proper ideal found is a
/// certified counterexample; "probably simple" means all sampled ideals were
/// full.
template <class R>
SimplicityVerdict simplicity_check(const LieAlgebra<R>& g, int trials, u64 seed,
                                   typename LieAlgebra<R>::Vec* witness_out = nullptr) {
  std::mt19937_64 rng(seed);
  SimplicityVerdict verdict;
  for (int t = 0; t < trials; ++t) {
    typename LieAlgebra<R>::Vec v = g.zero_vec();
    while (g.is_zero_vec(v)) {
      for (int i = 0; i < g.dim(); ++i)
        v[i] = R::from_int(g.ctx(), static_cast<long long>(rng() % 1000003));
    }
    auto ideal = ideal_closure(g, v);
    if (ideal.dim() < g.dim()) {
      verdict.probably_simple = false;
      verdict.witness_ideal_dim = ideal.dim();
      if (witness_out) *witness_out = v;
      return verdict;
    }
  }
  return verdict;
}

/// exp(ad_z) as a dense matrix: sum_{i<m} ad_z^i / i! with m the least power
/// where ad_z^m = 0. Requires characteristic 0 or p > m.
template <class R>
DenseMatrix<R> exp_ad(const LieAlgebra<R>& g, const typename LieAlgebra<R>::Vec& z, u64 char_p) {
  auto ad = g.ad_matrix(z);
  // find nilpotency order
  std::vector<DenseMatrix<R>> powers;
  powers.push_back(DenseMatrix<R>::identity(g.ctx(), g.dim()));
  int m = -1;
  for (int i = 1; i <= g.dim() + 1; ++i) {
    powers.push_back(powers.back().multiply(g.ctx(), ad));
    if (powers.back().is_zero(g.ctx())) {
      m = i;
      break;
    }
  }
  if (m < 0) fail(Errc::NotNilpotent, "ad_z is not nilpotent");
  if (char_p != 0 && char_p <= static_cast<u64>(m))
    fail(Errc::CharTooSmall, "characteristic " + std::to_string(char_p) +
                                 " too small for nilpotency order " + std::to_string(m));
  DenseMatrix<R> out(g.ctx(), g.dim(), g.dim());
  typename R::Elem fact = R::one(g.ctx());
  for (int i = 0; i < m; ++i) {
    if (i > 0) fact = R::mul(g.ctx(), fact, R::from_int(g.ctx(), i));
    typename R::Elem coef = R::inv(g.ctx(), fact);
    for (int r = 0; r < g.dim(); ++r)
      for (int c = 0; c < g.dim(); ++c)
        out.at(r, c) = R::add(g.ctx(), out.at(r, c), R::mul(g.ctx(), coef, powers[i].at(r, c)));
  }
  return out;
}

/// Checks that a linear map preserves brackets on sampled pairs.
template <class R>
bool preserves_brackets(const LieAlgebra<R>& g, const DenseMatrix<R>& m, int samples, u64 seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    typename LieAlgebra<R>::Vec x = g.zero_vec(), y = g.zero_vec();
    for (int i = 0; i < g.dim(); ++i) {
      x[i] = R::from_int(g.ctx(), static_cast<long long>(rng() % 97));
      y[i] = R::from_int(g.ctx(), static_cast<long long>(rng() % 97));
    }
    auto lhs = m.apply(g.ctx(), g.bracket(x, y));
    auto rhs = g.bracket(m.apply(g.ctx(), x), m.apply(g.ctx(), y));
    if (!g.eq_vec(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace liediam
