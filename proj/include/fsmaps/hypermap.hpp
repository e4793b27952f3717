#pragma once

#include <vector>

#include "fsmaps/mapcore.hpp"

namespace fsmaps {

/// σ0σ1σ2 = id and roots on distinct σ2-cycles; σ1 is unrestricted.
void validate_hypermap(const HypermapData& hypermap);

/// χ of the underlying bicoloured map minus the boundary interiors:
/// c(σ0) - |E| + c(σ1) + c(σ2) - #roots. Equals euler_characteristic on maps.
int hypermap_euler_characteristic(const HypermapData& hypermap);

/// h^(-χ) · t^(internal σ2-cycles) · u^(σ1-cycles), with |Aut|.
MapWeight hypermap_weight(const HypermapData& hypermap);

/// Σ over hypermaps with 1..e_max edges and ordered boundary degrees λ of
/// h^(-χ) t^… u^… / |Aut|, as labelled (σ0, σ1, R) on {1..e} divided by e!.
/// With `involutive_only`, σ1 ranges over fixed-point-free involutions.
/// Throws InvalidInput when |λ| > e_max or e_max is outside [1, 6].
LaurentSeries enumerate_hypermaps(const Partition& lambda, int e_max, bool fully_simple_only,
                                  bool involutive_only = false);

/// Map^h(λ) == z(λ) Σ_μ H^<(λ; μ) FSMap^h(μ) for every monomial with at most e_max edges.
bool hypermap_theorem_check(const Partition& lambda, int e_max);

/// Canonical representatives of every hypermap class with e edges and at least one root.
std::vector<HypermapData> hypermap_census(int e);

}  // namespace fsmaps
