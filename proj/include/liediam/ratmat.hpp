#pragma once

#include <vector>

#include "liediam/bigint.hpp"

namespace liediam {

/// Dense matrix of exact rationals (row-major).
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<RatVec> a;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(r, RatVec(c, BigRat(0))) {}

  BigRat& at(int i, int j) { return a[i][j]; }
  const BigRat& at(int i, int j) const { return a[i][j]; }

  static RationalMatrix identity(int n);
};

struct RankKernel {
  int rank = 0;
  std::vector<RatVec> kernel;  // basis of the right kernel, Mv = 0 exactly
};

/// Exact rank and right-kernel basis by fraction-free Gaussian elimination
/// (rows are scaled to integers, then Bareiss-style pivoting).
RankKernel rational_rank_kernel(const RationalMatrix& m);

/// Exact rank only.
int rational_rank(const RationalMatrix& m);

/// Solves M x = b exactly; returns empty vector when inconsistent.
RatVec rational_solve(const RationalMatrix& m, const RatVec& b);

/// Dense integer matrix (row-major).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<IntVec> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(r, IntVec(c, BigInt(0))) {}

  BigInt& at(int i, int j) { return a[i][j]; }
  const BigInt& at(int i, int j) const { return a[i][j]; }
};

/// Row-style Hermite normal form. Returns H (row echelon, pivot entries
/// positive, entries above pivots reduced) whose rows span the same
/// Z-row-lattice as the input; zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis of the integer (right) kernel {v in Z^cols : M v = 0}; the result is
/// a saturated sublattice basis, one row per generator.
IntMatrix integer_kernel(const IntMatrix& m);

/// Rank of an integer matrix over Q.
int integer_rank(const IntMatrix& m);

/// Solves M x = b over Q, M integer; empty when inconsistent.
RatVec integer_solve(const IntMatrix& m, const RatVec& b);

}  // namespace liediam
