#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fsmaps/partition.hpp"
#include "fsmaps/permutation.hpp"
#include "fsmaps/series.hpp"

namespace fsmaps {

/// Dessin d'enfant on edge set E: τ_r, τ_b, τ_v rotate around red faces,
/// blue faces and vertices, τ_r τ_b τ_v = id, one root per τ_b-cycle.
struct DessinData {
  Permutation tau_r;
  Permutation tau_b;
  Permutation tau_v;
  std::vector<int> roots;  ///< 0-based

  /// τ_r = (τ_b τ_v)⁻¹.
  static DessinData from_blue_vertex(Permutation tau_b, Permutation tau_v, std::vector<int> roots);

  std::size_t size() const { return tau_b.size(); }
  /// |E| - c(τ_v)
  int k() const;
  friend bool operator==(const DessinData&, const DessinData&) = default;
};

/// Throws InvalidInput naming the violated invariant:
/// "tau_r*tau_b*tau_v != id", "blue face without a root", "roots share a blue face", ...
void validate_dessin(const DessinData& dessin);

/// (a, b) with a < b, 0-based.
using Transposition = std::pair<int, int>;

/// The unique sequence τ1..τk with strictly increasing larger elements and
/// τ1⋯τk = p. Length |p| - (number of cycles).
std::vector<Transposition> monotone_factorization(const Permutation& p);

/// Right-to-left product τ1⋯τk on n points.
Permutation product_of(const std::vector<Transposition>& sequence, std::size_t n);

/// Every strictly monotone sequence in S_d, all lengths, by explicit recursion.
std::vector<std::vector<Transposition>> all_monotone_sequences(int d);
std::uint64_t count_monotone_sequences(int d);

/// D_k(λ; μ): rooted dessins with blue degrees λ (ordered through the roots),
/// red degrees μ (unordered) and |E| - c(τ_v) = k. Labelled triples on
/// {1..|λ|} with explicitly enumerated root tuples, divided by |λ|!.
Rational enumerate_dessins(const Partition& lambda, const Partition& mu, int k);

/// D_k(λ; μ) for all μ ⊢ |λ| and all k in one pass; absent keys are zero.
std::map<std::pair<Partition, int>, Rational> dessin_table(const Partition& lambda);

/// D_k(λ; μ) == z(λ) H^<_k(λ; μ) with the right side by brute force.
bool dessin_hurwitz_identity(const Partition& lambda, const Partition& mu, int k);

/// Canonical representatives of all rooted dessins with n edges (roots in any
/// order), with the number of labelled triples in each class whose first
/// root is point 0; that number is (n-1)! exactly when automorphisms are trivial.
struct DessinClass {
  DessinData dessin;
  std::uint64_t labellings = 0;
};
std::vector<DessinClass> dessin_census(int n);

}  // namespace fsmaps
