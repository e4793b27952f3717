#pragma once

#include <span>
#include <vector>

#include "fsmaps/dessin.hpp"
#include "fsmaps/mapcore.hpp"

namespace fsmaps {

struct SplitResult {
  MapData fully_simple;  ///< F(M), on the same oriented edges as M
  DessinData dessin;     ///< D(M), on {0..|B|-1}
  /// Dessin edge i is the boundary edge embedding[i] of F(M) (B in the label order of M).
  std::vector<int> embedding;
};

/// F(M) = ((σ0^∂)⁻¹σ0, σ1, σ2σ0^∂; R̄), D(M) = (∂(σ2σ0^∂)⁻¹, ∂(σ2), ∂(σ0); R).
/// R̄ comes from select_roots on the label order of M.
SplitResult forward(const MapData& map);

/// M(F, D) = (ι(τ_v)ρ0, ρ1, ρ2ι(τ_v)⁻¹; ι(R)).
///
/// ι sends the cycles of τ_r, taken by decreasing length and then by their
/// smallest edge in the label order of D, to the boundary faces of F in root
/// order, the smallest edge of each cycle going to the root, and follows
/// τ_r⁻¹ on D against ρ2 on F. Throws InvalidInput when F is not fully
/// simple or the cycle type of ∂(ρ2) differs from that of τ_r.
MapData reverse(const MapData& fully_simple, const DessinData& dessin);

/// The embedding used by `reverse`: dessin edge i ↦ oriented edge of F.
std::vector<int> reverse_embedding(const MapData& fully_simple, const DessinData& dessin);

/// The literal order-preserving identification of the two label orders
/// (dessin label order against the label order of F).
std::vector<int> order_preserving_embedding(const MapData& fully_simple, const DessinData& dessin);

/// M(F, D) with an explicit embedding.
MapData reverse_with_embedding(const MapData& fully_simple, const DessinData& dessin, std::span<const int> embedding);

/// Elements of `subset` lie in pairwise different cycles of (σ^∂)⁻¹σ.
bool boundary_restriction_lemma_check(const Permutation& sigma, std::span<const int> subset);

/// ∂(a)∘b == ∂(a∘ι(b)) for b a permutation of `subset` indexed by position.
bool restriction_homomorphism_check(const Permutation& a, const Permutation& b, std::span<const int> subset);

/// |B| - c(∂σ0) == c((σ0^∂)⁻¹σ0) - c(σ0) and -χ(M) == -χ(F(M)) + |B| - c(τ_v).
bool weight_bookkeeping_check(const MapData& map);

}  // namespace fsmaps
