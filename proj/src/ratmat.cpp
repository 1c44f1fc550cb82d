#include "liediam/ratmat.hpp"

#include <algorithm>
#include <utility>

namespace liediam {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m.a[sel], m.a[r]);
    BigRat inv = BigRat(1) / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      BigRat factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RankKernel rational_rank_kernel(const RationalMatrix& m) {
  RationalMatrix e = m;
  std::vector<int> pivots = rref(e);
  RankKernel out;
  out.rank = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(m.cols, BigRat(0));
    v[c] = 1;
    for (int r = 0; r < out.rank; ++r) v[pivots[r]] = -e.at(r, c);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

int rational_rank(const RationalMatrix& m) {
  // Fraction-free Bareiss elimination on the denominator-cleared matrix.
  std::vector<IntVec> a(m.rows, IntVec(m.cols));
  for (int i = 0; i < m.rows; ++i) {
    BigInt lcm = 1;
    for (int j = 0; j < m.cols; ++j) {
      BigInt den = denominator(m.at(i, j));
      lcm = lcm / big_gcd(lcm, den) * den;
    }
    for (int j = 0; j < m.cols; ++j)
      a[i][j] = numerator(m.at(i, j)) * (lcm / denominator(m.at(i, j)));
  }
  BigInt prev = 1;
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int sel = -1;
    for (int i = rank; i < m.rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[rank]);
    for (int i = rank + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j)
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

RatVec rational_solve(const RationalMatrix& m, const RatVec& b) {
  RationalMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == m.cols) return {};  // inconsistent
  RatVec x(m.cols, BigRat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

namespace {

// Euclidean row reduction used by the HNF; works column by column.
void hnf_in_place(IntMatrix& m, IntMatrix* transform) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    // Euclid on rows r..end to leave a single nonzero entry in column c.
    while (true) {
      int sel = -1;
      for (int i = r; i < m.rows; ++i) {
        if (m.at(i, c) != 0 && (sel < 0 || big_abs(m.at(i, c)) < big_abs(m.at(sel, c)))) sel = i;
      }
      if (sel < 0) break;
      std::swap(m.a[sel], m.a[r]);
      if (transform) std::swap(transform->a[sel], transform->a[r]);
      bool done = true;
      for (int i = r + 1; i < m.rows; ++i) {
        if (m.at(i, c) == 0) continue;
        BigInt q = m.at(i, c) / m.at(r, c);
        if (q != 0) {
          for (int j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
          if (transform)
            for (int j = 0; j < transform->cols; ++j) transform->at(i, j) -= q * transform->at(r, j);
        }
        if (m.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m.at(r, c) == 0) continue;
    if (m.at(r, c) < 0) {
      for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
      if (transform)
        for (int j = 0; j < transform->cols; ++j) transform->at(r, j) = -transform->at(r, j);
    }
    // reduce entries above the pivot
    for (int i = 0; i < r; ++i) {
      BigInt q = m.at(i, c) / m.at(r, c);
      if (m.at(i, c) % m.at(r, c) < 0) q -= 1;
      if (q != 0) {
        for (int j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
        if (transform)
          for (int j = 0; j < transform->cols; ++j) transform->at(i, j) -= q * transform->at(r, j);
      }
    }
    ++r;
  }
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  hnf_in_place(h, nullptr);
  // drop zero rows
  IntMatrix out;
  out.cols = h.cols;
  for (auto& row : h.a) {
    bool nz = false;
    for (auto& v : row)
      if (v != 0) {
        nz = true;
        break;
      }
    if (nz) out.a.push_back(row);
  }
  out.rows = static_cast<int>(out.a.size());
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Work on the transpose: U * m^T = H with U unimodular; rows of U matching
  // zero rows of H form a basis of the left kernel of m^T = right kernel of m.
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  IntMatrix u(m.cols, m.cols);
  for (int i = 0; i < m.cols; ++i) u.at(i, i) = 1;
  hnf_in_place(t, &u);
  IntMatrix out;
  out.cols = m.cols;
  for (int i = 0; i < t.rows; ++i) {
    bool zero = true;
    for (int j = 0; j < t.cols; ++j)
      if (t.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) out.a.push_back(u.a[i]);
  }
  out.rows = static_cast<int>(out.a.size());
  return out;
}

int integer_rank(const IntMatrix& m) {
  RationalMatrix q(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) q.at(i, j) = BigRat(m.at(i, j));
  return rational_rank(q);
}

RatVec integer_solve(const IntMatrix& m, const RatVec& b) {
  RationalMatrix q(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) q.at(i, j) = BigRat(m.at(i, j));
  return rational_solve(q, b);
}

}  // namespace liediam
