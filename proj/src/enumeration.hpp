#pragma once

// Labelled-configuration engine shared by the map and hypermap enumerations.

#include <vector>

#include "fsmaps/partition.hpp"
#include "fsmaps/permutation.hpp"
#include "fsmaps/series.hpp"

namespace fsmaps::detail {

constexpr int kMaxGround = 16;

struct ConfigurationSweep {
  int ground_size = 0;                      ///< n = |E|
  std::vector<Permutation> sigma1_choices;  ///< σ0 ranges over all of S_n for each
  std::vector<Partition> lambdas;           ///< ordered boundary degrees
  bool record_hyperedges = false;           ///< emit u_k for σ1-cycles of length k
};

struct SweepResult {
  std::vector<LaurentSeries> ordinary;      ///< per lambda, already divided by n!
  std::vector<LaurentSeries> fully_simple;
};

/// Sums h^(-χ) · t^(internal faces) [· u^(hyperedges)] over all labelled
/// configurations (σ0, σ1, R) with σ2 = (σ0σ1)⁻¹, root i on a σ2-cycle of
/// length λ_i, and χ = c(σ0) - n + c(σ1) + c(σ2) - ℓ(λ); divides by n!.
SweepResult sweep_configurations(const ConfigurationSweep& sweep);

}  // namespace fsmaps::detail
