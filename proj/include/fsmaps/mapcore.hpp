#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fsmaps/partition.hpp"
#include "fsmaps/permutation.hpp"
#include "fsmaps/series.hpp"

namespace fsmaps {

/// Rooted map in the permutation model: σ0 rotates oriented edges around
/// their vertex, σ1 swaps the two orientations of an edge, σ2 rotates around
/// the face on the left, and σ0σ1σ2 = id. `roots` holds one oriented edge per
/// boundary face, in boundary order.
///
/// Hypermaps use the same representation with σ1 unrestricted.
struct MapData {
  Permutation sigma0;
  Permutation sigma1;
  Permutation sigma2;
  std::vector<int> roots;  ///< 0-based

  /// Builds the map with σ2 = σ1⁻¹σ0⁻¹.
  static MapData from_vertex_edge(Permutation sigma0, Permutation sigma1, std::vector<int> roots);

  std::size_t size() const { return sigma0.size(); }
  friend bool operator==(const MapData&, const MapData&) = default;
};

using HypermapData = MapData;

/// Throws InvalidInput naming the first violated invariant:
/// "sigma1 not fixed-point-free", "sigma1 not an involution",
/// "sigma0*sigma1*sigma2 != id", "roots share a face", ...
void validate(const MapData& map);

/// (i, j): the j-th edge anticlockwise from root i, both 1-based.
struct Label {
  int face = 0;
  int position = 0;
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Boundary edges of a rooted map with their lexicographic labels.
class BoundaryStructure {
 public:
  BoundaryStructure() = default;
  /// `face_rotation` plays the role of σ2; the boundary is the union of the
  /// orbits of the roots.
  BoundaryStructure(const Permutation& face_rotation, std::span<const int> roots);

  /// Boundary edges in lexicographic label order.
  const std::vector<int>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool contains(int edge) const { return rank_[edge] >= 0; }
  /// Position of `edge` in `order()`, -1 off the boundary.
  int rank(int edge) const { return rank_[edge]; }
  Label label(int edge) const { return labels_[rank_[edge]]; }
  int edge(Label label) const;
  /// Boundary face degrees, in root order.
  const std::vector<int>& degrees() const { return degrees_; }

 private:
  std::vector<int> order_;
  std::vector<int> rank_;
  std::vector<Label> labels_;
  std::vector<int> degrees_;
};

/// ∂(σ): the permutation induced on `subset` by skipping the other points of
/// each cycle. The result acts on {0..|subset|-1}, indexed by position in `subset`.
Permutation boundary_restriction(const Permutation& sigma, std::span<const int> subset);
/// ι: extends a permutation of `subset` (indexed by position) by fixed points.
Permutation boundary_extension(const Permutation& on_subset, std::span<const int> subset, std::size_t n);
/// σ^∂ = ι∘∂(σ).
Permutation boundary_restriction_extended(const Permutation& sigma, std::span<const int> subset);

/// True iff σ0^∂ is the identity on the boundary, i.e. no vertex meets two boundary edges.
bool is_fully_simple(const MapData& map);

/// One root per boundary face of a map whose face rotation is `face_rotation`
/// and whose boundary edge set is `ordered.order()`: faces are taken by
/// decreasing degree, ties by their smallest element in the order of
/// `ordered`, and each root is that smallest element. This is the
/// lexicographically minimal root tuple whose degree sequence is a partition.
std::vector<int> select_roots(const Permutation& face_rotation, const BoundaryStructure& ordered);

struct MapWeight {
  int h_exponent = 0;          ///< -χ
  Monomial monomial;           ///< t_k^(number of internal faces of degree k)
  std::uint64_t aut_divisor = 1;
};

/// χ = c(σ0) - c(σ1) + c(σ2) - #roots (boundary interiors removed).
int euler_characteristic(const MapData& map);
MapWeight euler_and_weight(const MapData& map);

/// |Aut M|: relabelings commuting with σ0, σ1 and fixing every root.
/// Components with a root are rigid; closed components contribute c!·s^c
/// for c copies of a component with s symmetries.
std::uint64_t automorphism_count(const MapData& map);

/// Canonical representative of the equivalence class of `map`: breadth-first
/// relabeling from each root in turn, then closed components in order of
/// their minimal breadth-first code.
MapData canonical_form(const MapData& map);

/// Σ over maps with boundary degrees λ (ordered) and 1..m_max edges of
/// h^(-χ) t^(internal faces) / |Aut M|, computed as labelled configurations
/// (σ0, σ1, roots) on {1..2m} divided by (2m)!. Every coefficient of a
/// monomial reachable with at most m_max edges is exact.
/// Throws InvalidInput when |λ| > 2 m_max or m_max is outside [1, 6].
LaurentSeries enumerate_weighted(const Partition& lambda, int m_max, bool fully_simple_only);

struct OrdinaryAndSimple {
  LaurentSeries ordinary;
  LaurentSeries fully_simple;
};

/// Map(λ) and FSMap(λ) for several λ in one pass over the configurations.
std::map<Partition, OrdinaryAndSimple> enumerate_weighted_batch(const std::vector<Partition>& lambdas, int m_max);

/// Every equivalence class of maps with m edges and at least one root, as
/// canonical forms in increasing order.
std::vector<MapData> map_census(int m);

}  // namespace fsmaps
