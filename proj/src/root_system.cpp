#include "liediam/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "liediam/bigint.hpp"

namespace liediam {

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    case 'E': case 'e': return LieType::E;
    case 'F': case 'f': return LieType::F;
    case 'G': case 'g': return LieType::G;
  }
  fail(Errc::InvalidType, std::string("unknown Lie type '") + c + "'");
}

std::string lie_type_name(LieType t, int rank) {
  const char* names = "ABCDEFG";
  return std::string(1, names[static_cast<int>(t)]) + std::to_string(rank);
}

int classical_root_count(LieType t, int rank) {
  switch (t) {
    case LieType::A: return rank * (rank + 1);
    case LieType::B:
    case LieType::C: return 2 * rank * rank;
    case LieType::D: return 2 * rank * (rank - 1);
    case LieType::G: return 12;
    case LieType::F: return 48;
    case LieType::E:
      if (rank == 6) return 72;
      if (rank == 7) return 126;
      return 240;
  }
  return 0;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(LieType t, int n) {
  auto chain = [&](int len) {
    std::vector<std::vector<int>> a(len, std::vector<int>(len, 0));
    for (int i = 0; i < len; ++i) {
      a[i][i] = 2;
      if (i + 1 < len) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  switch (t) {
    case LieType::A: {
      if (n < 1) fail(Errc::InvalidType, "A_n needs n >= 1");
      return chain(n);
    }
    case LieType::B: {
      if (n < 2) fail(Errc::InvalidType, "B_n needs n >= 2");
      auto a = chain(n);
      a[n - 2][n - 1] = -2;  // alpha_{n-1} short
      return a;
    }
    case LieType::C: {
      if (n < 2) fail(Errc::InvalidType, "C_n needs n >= 2");
      auto a = chain(n);
      a[n - 1][n - 2] = -2;  // alpha_{n-1} long
      return a;
    }
    case LieType::D: {
      if (n < 4) fail(Errc::InvalidType, "D_n needs n >= 4");
      auto a = chain(n - 1);
      a.resize(n);
      for (auto& row : a) row.resize(n, 0);
      a[n - 1][n - 1] = 2;
      a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
      return a;
    }
    case LieType::G: {
      if (n != 2) fail(Errc::InvalidType, "G type has rank 2");
      return {{2, -1}, {-3, 2}};
    }
    case LieType::F: {
      if (n != 4) fail(Errc::InvalidType, "F type has rank 4");
      return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    }
    case LieType::E: {
      if (n < 6 || n > 8) fail(Errc::InvalidType, "E type has rank 6, 7 or 8");
      // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4.
      std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
      bond(0, 2);
      bond(2, 3);
      bond(1, 3);
      for (int i = 3; i + 1 < n; ++i) bond(i, i + 1);
      return a;
    }
  }
  fail(Errc::InvalidType, "unreachable");
}

}  // namespace

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
  cartan_ = cartan_matrix(type, rank);

  // symmetrizers: smallest positive integers with d_i A_{ij} = d_j A_{ji}
  std::vector<BigRat> dr(rank, BigRat(0));
  dr[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (cartan_[i][j] == 0 || i == j) continue;
        if (dr[i] != 0 && dr[j] == 0) {
          // d_j = d_i * A_{ji} / A_{ij}
          dr[j] = dr[i] * BigRat(cartan_[j][i]) / BigRat(cartan_[i][j]);
          changed = true;
        }
      }
  }
  BigInt lcm = 1;
  for (auto& q : dr) {
    if (q == 0) fail(Errc::InvalidType, "disconnected Cartan matrix");
    BigInt den = denominator(q);
    lcm = lcm / big_gcd(lcm, den) * den;
  }
  d_.resize(rank);
  BigInt g = 0;
  std::vector<BigInt> scaled(rank);
  for (int i = 0; i < rank; ++i) {
    scaled[i] = numerator(dr[i]) * (lcm / denominator(dr[i]));
    g = big_gcd(g, scaled[i]);
  }
  for (int i = 0; i < rank; ++i) d_[i] = static_cast<int>(scaled[i] / g);

  // positive roots by closure under simple reflections
  std::set<std::vector<int>> pos;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    pos.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> b = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      long long pair = 0;
      for (int j = 0; j < rank; ++j) pair += static_cast<long long>(b[j]) * cartan_[j][i];
      std::vector<int> refl = b;
      refl[i] -= static_cast<int>(pair);
      bool positive = false, negative = false;
      for (int c : refl) {
        if (c > 0) positive = true;
        if (c < 0) negative = true;
      }
      if (negative && !positive) continue;  // negatives mirror positives
      if (negative && positive) fail(Errc::InvalidType, "reflection produced a mixed-sign vector");
      if (pos.insert(refl).second) queue.push_back(refl);
    }
  }

  std::vector<std::vector<int>> plist(pos.begin(), pos.end());
  auto ht = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
  };
  std::sort(plist.begin(), plist.end(), [&](const auto& a, const auto& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  roots_ = plist;
  for (const auto& r : plist) {
    std::vector<int> neg(rank);
    for (int i = 0; i < rank; ++i) neg[i] = -r[i];
    roots_.push_back(neg);
  }
  for (int i = 0; i < num_roots(); ++i) index_[roots_[i]] = i;

  if (num_roots() != classical_root_count(type, rank))
    fail(Errc::InvalidType, "root count mismatch for " + lie_type_name(type, rank));

  // highest root: unique maximum height
  highest_ = num_positive() - 1;
  int hmax = height(highest_);
  for (int i = 0; i < num_positive() - 1; ++i)
    if (height(i) == hmax) fail(Errc::InvalidType, "highest root is not unique");
}

int RootSystem::root_index(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int idx) const {
  const auto& r = roots_[idx];
  return std::accumulate(r.begin(), r.end(), 0);
}

long long RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      s += static_cast<long long>(a[i]) * b[j] * cartan_[i][j] * d_[j];
    }
  }
  return s;
}

long long RootSystem::pairing_with_simple_coroot(const std::vector<int>& beta, int i) const {
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<long long>(beta[j]) * cartan_[j][i];
  return s;
}

std::vector<long long> RootSystem::coroot_coordinates(int idx) const {
  const auto& r = roots_[idx];
  long long n2 = norm2(idx);
  std::vector<long long> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    long long num = static_cast<long long>(r[i]) * 2 * d_[i];
    if (num % n2 != 0) fail(Errc::SignConflict, "non-integral coroot coordinate");
    out[i] = num / n2;
  }
  return out;
}

int RootSystem::root_string_down(int alpha_idx, int beta_idx) const {
  const auto& alpha = roots_[alpha_idx];
  std::vector<int> cur = roots_[beta_idx];
  int t = 0;
  while (true) {
    for (int i = 0; i < rank_; ++i) cur[i] -= alpha[i];
    bool zero = std::all_of(cur.begin(), cur.end(), [](int c) { return c == 0; });
    if (zero || !is_root(cur)) break;
    ++t;
  }
  return t;
}

int RootSystem::sum_index(int a, int b) const {
  std::vector<int> s(rank_);
  for (int i = 0; i < rank_; ++i) s[i] = roots_[a][i] + roots_[b][i];
  return root_index(s);
}

RootSystem generate_root_system(LieType type, int rank) { return RootSystem(type, rank); }

// ---------------------------------------------------------------------------
// Chevalley structure constants via extraspecial pairs.
// ---------------------------------------------------------------------------

namespace {

class ConstantsBuilder {
 public:
  explicit ConstantsBuilder(const RootSystem& rs) : rs_(rs) {}

  std::map<std::pair<int, int>, long long> build() {
    const int np = rs_.num_positive();
    // process positive roots in (height, lex) order = index order
    for (int g = 0; g < np; ++g) {
      if (rs_.height(g) < 2) continue;
      // special pairs (a, b), a < b, both positive, sum = g
      std::vector<std::pair<int, int>> special;
      for (int a = 0; a < np; ++a) {
        std::vector<int> diff(rs_.rank());
        for (int i = 0; i < rs_.rank(); ++i) diff[i] = rs_.root(g)[i] - rs_.root(a)[i];
        int b = rs_.root_index(diff);
        if (b >= 0 && b < np && a < b) special.emplace_back(a, b);
      }
      if (special.empty()) fail(Errc::SignConflict, "no special pair for a non-simple root");
      auto [xi, eta] = special.front();  // minimal first component = extraspecial
      set_pos(xi, eta, rs_.root_string_down(xi, eta) + 1);
      for (size_t s = 1; s < special.size(); ++s) {
        auto [a, b] = special[s];
        // Jacobi on (e_a, e_b, e_{-xi}) determines N(a, b):
        //   N(a,b) N(g,-xi) + N(b,-xi) N(b-xi,a) + N(-xi,a) N(a-xi,b) = 0
        BigRat ngmx = resolve(g, neg(xi));
        BigRat t2 = term(b, xi, a);
        BigRat t3 = 0;
        {
          int amx = diff_index(a, xi);
          if (amx >= 0) t3 = resolve(neg(xi), a) * resolve(amx, b);
        }
        BigRat val = -(t2 + t3) / ngmx;
        if (denominator(val) != 1) fail(Errc::SignConflict, "non-integral propagated constant");
        long long n = numerator(val).convert_to<long long>();
        long long expect = rs_.root_string_down(a, b) + 1;
        if (n != expect && n != -expect)
          fail(Errc::SignConflict, "propagated constant violates the magnitude rule");
        set_pos(a, b, n);
      }
    }
    // materialize the full table over all ordered pairs
    std::map<std::pair<int, int>, long long> out;
    for (int a = 0; a < rs_.num_roots(); ++a)
      for (int b = 0; b < rs_.num_roots(); ++b) {
        if (a == b || rs_.negative_of(a) == b) continue;
        if (rs_.sum_index(a, b) < 0) continue;
        BigRat v = resolve(a, b);
        if (denominator(v) != 1) fail(Errc::SignConflict, "non-integral structure constant");
        out[{a, b}] = numerator(v).convert_to<long long>();
      }
    return out;
  }

 private:
  int neg(int idx) const { return rs_.negative_of(idx); }
  int diff_index(int a, int xi) const {
    std::vector<int> d(rs_.rank());
    for (int i = 0; i < rs_.rank(); ++i) d[i] = rs_.root(a)[i] - rs_.root(xi)[i];
    return rs_.root_index(d);
  }
  BigRat term(int b, int xi, int a) {
    int bmx = diff_index(b, xi);
    if (bmx < 0) return 0;
    return resolve(b, neg(xi)) * resolve(bmx, a);
  }

  void set_pos(int a, int b, long long v) { pos_table_[{a, b}] = v; }

  // N for any ordered pair of root indices whose sum is a root; exact.
  BigRat resolve(int a, int b) {
    const int np = rs_.num_positive();
    bool apos = a < np, bpos = b < np;
    if (apos && bpos) {
      if (a < b) {
        auto it = pos_table_.find({a, b});
        if (it == pos_table_.end()) fail(Errc::SignConflict, "positive pair not yet computed");
        return BigRat(it->second);
      }
      return -resolve(b, a);
    }
    if (!apos && !bpos) return -resolve(neg(a), neg(b));
    if (!apos) return -resolve(b, a);  // normalize: first positive
    // a positive, b negative; s = a + b is a root
    int s = rs_.sum_index(a, b);
    if (s < np) {
      // cyclic triple (a, b, -s): N(a,b) = (s,s)/(a,a) * N(b, -s), and
      // (b, -s) is a pair of negatives: N(b,-s) = -N(-b, s)
      BigRat ratio(rs_.norm2(s), rs_.norm2(a));
      return -ratio * resolve(neg(b), s);
    }
    // negative sum: flip both
    return -resolve(neg(a), neg(b));
  }

  const RootSystem& rs_;
  std::map<std::pair<int, int>, long long> pos_table_;
};

}  // namespace

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs) : rs_(rs) {
  table_ = ConstantsBuilder(rs).build();
  // antisymmetry and magnitude rule
  for (const auto& [key, v] : table_) {
    auto [a, b] = key;
    auto it = table_.find({b, a});
    if (it == table_.end() || it->second != -v)
      fail(Errc::SignConflict, "structure constants are not antisymmetric");
    long long expect = rs_.root_string_down(a, b) + 1;
    if (v != expect && v != -expect)
      fail(Errc::SignConflict, "magnitude rule |N| = p+1 violated");
  }
}

long long ChevalleyConstants::n(int a, int b) const {
  auto it = table_.find({a, b});
  return it == table_.end() ? 0 : it->second;
}

}  // namespace liediam
