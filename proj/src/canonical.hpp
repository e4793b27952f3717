#pragma once

// Canonical relabeling of rooted permutation pairs, shared by maps,
// hypermaps and dessins.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fsmaps/permutation.hpp"

namespace fsmaps::detail {

struct Relabeling {
  std::vector<int> new_label;       ///< old point -> canonical point
  std::uint64_t automorphisms = 1;  ///< relabelings commuting with both generators and fixing the roots
};

/// Labels the components of <a, b> breadth-first (neighbours a(x) then b(x)):
/// first from each root in order, then the closed components sorted by their
/// minimal breadth-first code.
Relabeling canonical_relabeling(const Permutation& a, const Permutation& b, std::span<const int> roots);

/// Conjugate of p by the relabeling: q(new(x)) = new(p(x)).
Permutation relabel(const Permutation& p, const std::vector<int>& new_label);

/// Compact byte string identifying (a, b, roots) after canonical relabeling.
std::string canonical_key(const Permutation& a, const Permutation& b, std::span<const int> roots);

/// Visits one representative (σ0, σ1, roots) of each equivalence class of
/// configurations on n points with σ1 drawn from `sigma1_choices` (which must
/// meet every conjugacy class that matters), σ0 from S_n and at least one
/// root, roots on distinct σ2-cycles, σ2 = (σ0σ1)⁻¹. Representatives are
/// canonical and visited in increasing key order.
void for_each_rooted_class(int n, const std::vector<Permutation>& sigma1_choices,
                           const std::function<void(const Permutation& sigma0, const Permutation& sigma1,
                                                    const std::vector<int>& roots)>& visit);

}  // namespace fsmaps::detail
