#pragma once

#include <optional>
#include <vector>

#include "liediam/error.hpp"

namespace liediam {

/// Incremental echelonized span over a coefficient field R. Rows are kept
/// reduced with unit pivots; optional coordinate tracking expresses each
/// stored row in terms of the vectors passed to insert().
template <class R>
class EchelonBasis {
 public:
  using Elem = typename R::Elem;
  using Vec = std::vector<Elem>;

  EchelonBasis(const typename R::Ctx& ctx, int width, bool track_coords = false)
      : ctx_(ctx), width_(width), track_(track_coords) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduces v against the current rows; returns the residual.
  Vec reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Elem& c = v[pivots_[r]];
      if (R::is_zero(ctx_, c)) continue;
      Elem f = c;
      for (int j = 0; j < width_; ++j) v[j] = R::sub(ctx_, v[j], R::mul(ctx_, f, rows_[r][j]));
    }
    return v;
  }

  bool contains(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& c : r)
      if (!R::is_zero(ctx_, c)) return false;
    return true;
  }

  /// Inserts v; returns true when v enlarged the span. The insertion index
  /// (total inserts so far) is what coordinates refer to.
  bool insert(const Vec& v) {
    Vec coord;
    if (track_) {
      coord.assign(n_inserts_ + 1, R::zero(ctx_));
      coord[n_inserts_] = R::one(ctx_);
    }
    ++n_inserts_;
    Vec w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Elem c = w[pivots_[r]];
      if (R::is_zero(ctx_, c)) continue;
      for (int j = 0; j < width_; ++j) w[j] = R::sub(ctx_, w[j], R::mul(ctx_, c, rows_[r][j]));
      if (track_) {
        for (size_t j = 0; j < coords_[r].size(); ++j)
          coord[j] = R::sub(ctx_, coord[j], R::mul(ctx_, c, coords_[r][j]));
      }
    }
    int piv = -1;
    for (int j = 0; j < width_; ++j)
      if (!R::is_zero(ctx_, w[j])) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    Elem inv = R::inv(ctx_, w[piv]);
    for (int j = 0; j < width_; ++j) w[j] = R::mul(ctx_, inv, w[j]);
    if (track_) {
      for (auto& c : coord) c = R::mul(ctx_, inv, c);
      for (auto& cr : coords_) cr.resize(n_inserts_, R::zero(ctx_));
      coord.resize(n_inserts_, R::zero(ctx_));
      coords_.push_back(coord);
    }
    // keep rows fully reduced above the new pivot
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Elem c = rows_[r][piv];
      if (R::is_zero(ctx_, c)) continue;
      for (int j = 0; j < width_; ++j)
        rows_[r][j] = R::sub(ctx_, rows_[r][j], R::mul(ctx_, c, w[j]));
      if (track_)
        for (size_t j = 0; j < coords_[r].size(); ++j)
          coords_[r][j] = R::sub(ctx_, coords_[r][j], R::mul(ctx_, c, coord[j]));
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }

  /// Coordinates of v in terms of the inserted vectors (requires tracking);
  /// nullopt when v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const {
    Vec out(n_inserts_, R::zero(ctx_));
    Vec w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Elem c = w[pivots_[r]];
      if (R::is_zero(ctx_, c)) continue;
      for (int j = 0; j < width_; ++j) w[j] = R::sub(ctx_, w[j], R::mul(ctx_, c, rows_[r][j]));
      for (size_t j = 0; j < coords_[r].size(); ++j)
        out[j] = R::add(ctx_, out[j], R::mul(ctx_, c, coords_[r][j]));
    }
    for (const auto& c : w)
      if (!R::is_zero(ctx_, c)) return std::nullopt;
    return out;
  }

 private:
  typename R::Ctx ctx_;
  int width_;
  bool track_;
  int n_inserts_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
  std::vector<Vec> coords_;
};

/// Dense matrix over a field ring; minimal operations for adjoint maps.
template <class R>
struct DenseMatrix {
  using Elem = typename R::Elem;
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  DenseMatrix() = default;
  DenseMatrix(const typename R::Ctx& ctx, int r, int c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, R::zero(ctx)) {}

  Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static DenseMatrix identity(const typename R::Ctx& ctx, int n) {
    DenseMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R::one(ctx);
    return m;
  }

  std::vector<Elem> apply(const typename R::Ctx& ctx, const std::vector<Elem>& v) const {
    std::vector<Elem> out(rows, R::zero(ctx));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        out[i] = R::add(ctx, out[i], R::mul(ctx, at(i, j), v[j]));
    return out;
  }

  DenseMatrix multiply(const typename R::Ctx& ctx, const DenseMatrix& o) const {
    DenseMatrix out(ctx, rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const Elem& c = at(i, k);
        if (R::is_zero(ctx, c)) continue;
        for (int j = 0; j < o.cols; ++j)
          out.at(i, j) = R::add(ctx, out.at(i, j), R::mul(ctx, c, o.at(k, j)));
      }
    return out;
  }

  bool is_zero(const typename R::Ctx& ctx) const {
    for (const auto& x : a)
      if (!R::is_zero(ctx, x)) return false;
    return true;
  }

  bool is_identity(const typename R::Ctx& ctx) const {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!R::eq(ctx, at(i, j), (i == j) ? R::one(ctx) : R::zero(ctx))) return false;
    return true;
  }
};

/// Kernel basis of a dense matrix over a field ring.
template <class R>
std::vector<std::vector<typename R::Elem>> field_kernel(const typename R::Ctx& ctx,
                                                        const DenseMatrix<R>& m) {
  using Vec = std::vector<typename R::Elem>;
  int rows = m.rows, cols = m.cols;
  std::vector<Vec> a(rows, Vec(cols, R::zero(ctx)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!R::is_zero(ctx, a[i][c])) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[r]);
    typename R::Elem inv = R::inv(ctx, a[r][c]);
    for (int j = 0; j < cols; ++j) a[r][j] = R::mul(ctx, inv, a[r][j]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || R::is_zero(ctx, a[i][c])) continue;
      typename R::Elem f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = R::sub(ctx, a[i][j], R::mul(ctx, f, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> kernel;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, R::zero(ctx));
    v[c] = R::one(ctx);
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = R::neg(ctx, a[i][c]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace liediam
