#pragma once

#include <map>
#include <string>
#include <vector>

#include "liediam/error.hpp"

namespace liediam {

enum class LieType { A, B, C, D, E, F, G };

LieType lie_type_from_char(char c);
std::string lie_type_name(LieType t, int rank);

/// Root system data for a simple type. Roots are integer vectors in the
/// simple-root basis; positive roots come first, sorted by (height, lex),
/// followed by their negatives in matching order.
class RootSystem {
 public:
  RootSystem(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  const std::vector<int>& root(int idx) const { return roots_[idx]; }
  const std::vector<std::vector<int>>& roots() const { return roots_; }

  /// Index of a root vector, or -1.
  int root_index(const std::vector<int>& coords) const;
  bool is_root(const std::vector<int>& coords) const { return root_index(coords) >= 0; }
  int negative_of(int idx) const { return idx < num_positive() ? idx + num_positive() : idx - num_positive(); }
  bool is_positive(int idx) const { return idx < num_positive(); }

  int height(int idx) const;
  int highest_root() const { return highest_; }

  /// Symmetrizers d_i with (alpha_i, alpha_i) = 2 d_i.
  const std::vector<int>& symmetrizers() const { return d_; }
  /// (alpha, beta) via the symmetrized Cartan matrix; exact integer.
  long long inner(const std::vector<int>& a, const std::vector<int>& b) const;
  long long norm2(int idx) const { return inner(roots_[idx], roots_[idx]); }

  /// Cartan pairing <beta, alpha_i^vee> = sum_j beta_j A_{ji}.
  long long pairing_with_simple_coroot(const std::vector<int>& beta, int i) const;

  /// Coroot of root idx expanded over simple coroots; entries are integers.
  std::vector<long long> coroot_coordinates(int idx) const;

  /// Largest t >= 0 with beta - t*alpha a root (alpha, beta roots, beta != +-alpha).
  int root_string_down(int alpha_idx, int beta_idx) const;

  /// Sum of two roots as an index, or -1 when not a root.
  int sum_index(int a, int b) const;

 private:
  LieType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  int highest_ = -1;
};

/// Classical root counts: A_n n(n+1), B_n/C_n 2n^2, D_n 2n(n-1), G_2 12,
/// F_4 48, E_6 72, E_7 126, E_8 240.
int classical_root_count(LieType t, int rank);

RootSystem generate_root_system(LieType type, int rank);

/// Integer Chevalley structure constants N_{alpha,beta} for all ordered root
/// pairs with root sum, normalized by positive extraspecial pairs under the
/// (height, lex) order.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(const RootSystem& rs);

  /// N_{alpha,beta}; 0 when alpha+beta is not a root.
  long long n(int a, int b) const;
  const RootSystem& roots() const { return rs_; }

 private:
  const RootSystem& rs_;
  std::map<std::pair<int, int>, long long> table_;
};

}  // namespace liediam
