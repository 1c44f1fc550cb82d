#pragma once

#include <vector>

#include "liediam/root_system.hpp"

namespace liediam {

/// A Dynkin-diagram symmetry with its induced signed action on root vectors:
/// theta(e_alpha) = eps(alpha) e_{theta(alpha)}, theta(h_i) = h_{theta(i)},
/// with eps = +1 on simple roots and the rest propagated through brackets.
struct DiagramAutomorphism {
  std::vector<int> node_perm;  // permutation of simple-root indices
  std::vector<int> root_perm;  // induced permutation of all root indices
  std::vector<int> eps;        // sign per root index, +-1
  int order = 1;

  int apply_root(int idx) const { return root_perm[idx]; }
  int sign(int idx) const { return eps[idx]; }
};

/// Validates that the node permutation preserves the Cartan matrix, computes
/// the sign function by propagation, and verifies the signed map is a Lie
/// ring automorphism of g(Z) of the stated order.
DiagramAutomorphism diagram_automorphism(const RootSystem& rs, const ChevalleyConstants& cc,
                                         const std::vector<int>& node_perm);

/// Finds a canonical nontrivial diagram symmetry of the given order by
/// searching node permutations; identity for order 1.
DiagramAutomorphism standard_twist(const RootSystem& rs, const ChevalleyConstants& cc, int order);

}  // namespace liediam
