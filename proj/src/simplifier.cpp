#include "fsmaps/simplifier.hpp"

#include "fsmaps/error.hpp"

namespace fsmaps {

namespace detail {
void validate_rooted_triple(const MapData& map);
}

namespace {

// Next boundary edge around the vertex of `e`: σ0^r(e) with r ≥ 1 minimal.
int boundary_successor(const std::vector<int>& sigma0, const BoundaryStructure& boundary, int e) {
  int y = sigma0[e];
  while (!boundary.contains(y)) y = sigma0[y];
  return y;
}

}  // namespace

SimplificationResult simplify(const MapData& map) {
  detail::validate_rooted_triple(map);
  SimplificationResult result;
  result.boundary = BoundaryStructure(map.sigma2, map.roots);
  const BoundaryStructure& boundary = result.boundary;

  std::vector<int> s0 = map.sigma0.images();
  std::vector<int> s2 = map.sigma2.images();
  std::vector<int> s2_inverse = map.sigma2.inverse().images();
  std::vector<int> s0_inverse = map.sigma0.inverse().images();

  for (int e : boundary.order()) {
    int partner = boundary_successor(s0, boundary, e);
    SimplificationStep step{boundary.label(e), partner != e, boundary.label(partner)};
    result.steps.push_back(step);
    if (partner == e) continue;
    if (boundary.rank(partner) < boundary.rank(e))
      throw std::logic_error("simplify: partner precedes the visited edge");
    // σ0 ← (e partner)∘σ0
    const int a = s0_inverse[e], b = s0_inverse[partner];
    s0[a] = partner;
    s0[b] = e;
    s0_inverse[partner] = a;
    s0_inverse[e] = b;
    // σ2 ← σ2∘(e partner)
    const int ie = s2[e], ip = s2[partner];
    s2[e] = ip;
    s2[partner] = ie;
    s2_inverse[ip] = e;
    s2_inverse[ie] = partner;
    result.transpositions.push_back(
        LabelledTransposition{boundary.label(e), boundary.label(partner), e, partner});
  }

  Permutation sigma2 = Permutation::from_images(std::move(s2));
  std::vector<int> roots = select_roots(sigma2, boundary);
  result.simple_map = MapData{Permutation::from_images(std::move(s0)), map.sigma1, std::move(sigma2), std::move(roots)};
  return result;
}

bool check_monotone(const SimplificationResult& result) {
  for (std::size_t i = 0; i < result.transpositions.size(); ++i) {
    const auto& t = result.transpositions[i];
    if (!(t.smaller < t.larger)) return false;
    if (i > 0 && !(result.transpositions[i - 1].smaller < t.smaller)) return false;
  }
  return true;
}

MapData apply_transpositions(const MapData& map, const std::vector<LabelledTransposition>& transpositions) {
  const std::size_t n = map.size();
  Permutation sigma0 = map.sigma0;
  Permutation sigma2 = map.sigma2;
  for (const auto& t : transpositions) {
    Permutation tau = Permutation::transposition(n, t.smaller_edge, t.larger_edge);
    sigma0 = tau * sigma0;
    sigma2 = sigma2 * tau;
  }
  BoundaryStructure boundary(map.sigma2, map.roots);
  std::vector<int> roots = select_roots(sigma2, boundary);
  return MapData{std::move(sigma0), map.sigma1, std::move(sigma2), std::move(roots)};
}

MapData undo_transpositions(const MapData& simple_map, const std::vector<LabelledTransposition>& transpositions,
                            std::vector<int> original_roots) {
  const std::size_t n = simple_map.size();
  Permutation sigma0 = simple_map.sigma0;
  Permutation sigma2 = simple_map.sigma2;
  for (auto it = transpositions.rbegin(); it != transpositions.rend(); ++it) {
    Permutation tau = Permutation::transposition(n, it->smaller_edge, it->larger_edge);
    sigma0 = tau * sigma0;
    sigma2 = sigma2 * tau;
  }
  return MapData{std::move(sigma0), simple_map.sigma1, std::move(sigma2), std::move(original_roots)};
}

std::vector<std::pair<int, int>> reversed_convention(const SimplificationResult& result) {
  const int top = static_cast<int>(result.boundary.size()) - 1;
  std::vector<std::pair<int, int>> out;
  for (auto it = result.transpositions.rbegin(); it != result.transpositions.rend(); ++it) {
    int a = top - result.boundary.rank(it->larger_edge);
    int b = top - result.boundary.rank(it->smaller_edge);
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace fsmaps
