#pragma once

#include <utility>
#include <vector>

#include "fsmaps/mapcore.hpp"

namespace fsmaps {

/// One transposition ((p,q); (p',q')) with (p,q) < (p',q') in label order.
struct LabelledTransposition {
  Label smaller;
  Label larger;
  int smaller_edge = 0;  ///< 0-based oriented edge
  int larger_edge = 0;
  friend bool operator==(const LabelledTransposition&, const LabelledTransposition&) = default;
};

struct SimplificationStep {
  Label visited;
  bool applied = false;
  Label partner;  ///< σ0^∂ of the visited edge at that moment; equals `visited` when skipped
};

struct SimplificationResult {
  MapData simple_map;
  std::vector<LabelledTransposition> transpositions;
  std::vector<SimplificationStep> steps;
  BoundaryStructure boundary;  ///< labels of the input map

  int k() const { return static_cast<int>(transpositions.size()); }
};

/// Visits the boundary edges in label order; whenever σ0^∂(e) ≠ e it applies
/// τ = (e σ0^∂(e)) as σ0 ← τσ0, σ2 ← σ2τ. Roots of the result are re-selected
/// with select_roots on the input label order.
/// Throws InvalidInput when `map` fails validation (σ1 is not checked to be
/// an involution, so hypermaps are accepted).
SimplificationResult simplify(const MapData& map);

/// Smaller transposed labels strictly increase along the sequence.
bool check_monotone(const SimplificationResult& result);

/// σ0^s = τ_k⋯τ1 σ0, σ2^s = σ2 τ1⋯τk applied to the input, roots re-selected.
MapData apply_transpositions(const MapData& map, const std::vector<LabelledTransposition>& transpositions);

/// Inverse of apply_transpositions: σ0 = τ1⋯τk σ0^s, σ2 = σ2^s τk⋯τ1, roots
/// taken from `original_roots`.
MapData undo_transpositions(const MapData& simple_map, const std::vector<LabelledTransposition>& transpositions,
                            std::vector<int> original_roots);

/// The sequence read in the opposite label order: with N = |B| and rank r ↦ N-1-r,
/// listed last to first. Pairs are (a, b) with a < b as 0-based ranks; the
/// larger elements strictly increase and the product equals the inverse of
/// the product of the original sequence.
std::vector<std::pair<int, int>> reversed_convention(const SimplificationResult& result);

}  // namespace fsmaps
