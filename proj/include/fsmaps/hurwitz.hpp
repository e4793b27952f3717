#pragma once

#include <map>

#include "fsmaps/partition.hpp"
#include "fsmaps/series.hpp"

namespace fsmaps {

enum class HurwitzKind { strict, weak };

struct HurwitzSeries {
  HurwitzKind kind = HurwitzKind::strict;
  Partition lambda;
  Partition mu;
  LaurentSeries series;  ///< in h only
};

/// (1/d!) #{(ρ_λ, τ1..τk, ρ_μ)}: ρ_λ τ1⋯τk ρ_μ = id, τi = (ai bi) with ai < bi
/// and b strictly (weakly) increasing. Throws InvalidInput when |λ| ≠ |μ|.
Rational strict_brute(const Partition& lambda, const Partition& mu, int k);
Rational weak_brute(const Partition& lambda, const Partition& mu, int k);

/// Brute-force counts for every μ ⊢ |λ| in one search.
std::map<Partition, Rational> brute_row(const Partition& lambda, int k, HurwitzKind kind);

/// Σ_ρ χ_ρ(λ)χ_ρ(μ)/(z(λ)z(μ)) Π_□ (1 + c(□)h), exact.
HurwitzSeries strict_character(const Partition& lambda, const Partition& mu);
/// Σ_ρ χ_ρ(λ)χ_ρ(μ)/(z(λ)z(μ)) Π_□ 1/(1 - c(□)h), truncated at h^order.
HurwitzSeries weak_character(const Partition& lambda, const Partition& mu, int order);

/// (1/d!) [id] C_λ C_μ Π_m (1 + h J_m)  (or Π 1/(1 - h J_m) when weak),
/// through h^order, evaluated in the class algebra. d ≤ 7.
LaurentSeries class_algebra_series(const Partition& lambda, const Partition& mu, HurwitzKind kind, int order);

/// Σ_ρ (z(λ) H^<(λ;ρ)) (z(ρ) H^≤(ρ;μ)|_{h→-h}) == δ_{λμ} through h^order.
bool inverse_identity_check(const Partition& lambda, const Partition& mu, int order);

}  // namespace fsmaps
