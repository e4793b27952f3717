#include "fsmaps/mapcore.hpp"

#include <algorithm>

#include "canonical.hpp"
#include "enumeration.hpp"
#include "fsmaps/error.hpp"
#include "fsmaps/symgrp.hpp"

namespace fsmaps {

MapData MapData::from_vertex_edge(Permutation sigma0, Permutation sigma1, std::vector<int> roots) {
  Permutation sigma2 = (sigma0 * sigma1).inverse();
  return MapData{std::move(sigma0), std::move(sigma1), std::move(sigma2), std::move(roots)};
}

namespace detail {

// Invariants shared by maps and hypermaps.
void validate_rooted_triple(const MapData& map) {
  const std::size_t n = map.sigma0.size();
  if (n == 0) throw InvalidInput("empty ground set");
  if (map.sigma1.size() != n || map.sigma2.size() != n) throw InvalidInput("permutations of different sizes");
  if (!(map.sigma0 * map.sigma1 * map.sigma2).is_identity()) throw InvalidInput("sigma0*sigma1*sigma2 != id");
  std::vector<char> face_used(n, 0);
  std::vector<int> face(n, -1);
  int f = 0;
  for (const auto& cycle : map.sigma2.cycles()) {
    for (int x : cycle) face[x] = f;
    ++f;
  }
  for (int r : map.roots) {
    if (r < 0 || static_cast<std::size_t>(r) >= n) throw InvalidInput("root outside the ground set");
    if (face_used[face[r]]) throw InvalidInput("roots share a face");
    face_used[face[r]] = 1;
  }
}

}  // namespace detail

void validate(const MapData& map) {
  const std::size_t n = map.sigma0.size();
  if (map.sigma1.size() == n) {
    for (std::size_t x = 0; x < n; ++x)
      if (map.sigma1(static_cast<int>(x)) == static_cast<int>(x)) throw InvalidInput("sigma1 not fixed-point-free");
    for (std::size_t x = 0; x < n; ++x)
      if (map.sigma1(map.sigma1(static_cast<int>(x))) != static_cast<int>(x))
        throw InvalidInput("sigma1 not an involution");
  }
  detail::validate_rooted_triple(map);
}

BoundaryStructure::BoundaryStructure(const Permutation& face_rotation, std::span<const int> roots)
    : rank_(face_rotation.size(), -1) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    int degree = 0;
    int x = roots[i];
    do {
      if (rank_[x] >= 0) throw InvalidInput("roots share a face");
      rank_[x] = static_cast<int>(order_.size());
      order_.push_back(x);
      labels_.push_back(Label{static_cast<int>(i) + 1, ++degree});
      x = face_rotation(x);
    } while (x != roots[i]);
    degrees_.push_back(degree);
  }
}

int BoundaryStructure::edge(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw InvalidInput("no boundary edge with this label");
  return order_[static_cast<std::size_t>(it - labels_.begin())];
}

Permutation boundary_restriction(const Permutation& sigma, std::span<const int> subset) {
  std::vector<int> position(sigma.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (position[subset[i]] >= 0) throw InvalidInput("boundary subset has repeated elements");
    position[subset[i]] = static_cast<int>(i);
  }
  std::vector<int> images(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    int y = sigma(subset[i]);
    while (position[y] < 0) y = sigma(y);
    images[i] = position[y];
  }
  return Permutation::from_images(std::move(images));
}

Permutation boundary_extension(const Permutation& on_subset, std::span<const int> subset, std::size_t n) {
  if (on_subset.size() != subset.size()) throw InvalidInput("boundary extension: size mismatch");
  Permutation identity(n);
  std::vector<int> images = identity.images();
  for (std::size_t i = 0; i < subset.size(); ++i) images[subset[i]] = subset[on_subset(static_cast<int>(i))];
  return Permutation::from_images(std::move(images));
}

Permutation boundary_restriction_extended(const Permutation& sigma, std::span<const int> subset) {
  return boundary_extension(boundary_restriction(sigma, subset), subset, sigma.size());
}

bool is_fully_simple(const MapData& map) {
  BoundaryStructure boundary(map.sigma2, map.roots);
  return boundary_restriction(map.sigma0, boundary.order()).is_identity();
}

std::vector<int> select_roots(const Permutation& face_rotation, const BoundaryStructure& ordered) {
  struct Face {
    int degree;
    int first_rank;
    int first_edge;
  };
  std::vector<Face> faces;
  std::vector<char> seen(face_rotation.size(), 0);
  for (int start : ordered.order()) {  // increasing rank, so the first visit is the minimum
    if (seen[start]) continue;
    int degree = 0;
    int x = start;
    do {
      if (!ordered.contains(x)) throw InvalidInput("boundary is not a union of faces");
      seen[x] = 1;
      ++degree;
      x = face_rotation(x);
    } while (x != start);
    faces.push_back(Face{degree, ordered.rank(start), start});
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.degree != b.degree ? a.degree > b.degree : a.first_rank < b.first_rank;
  });
  std::vector<int> roots;
  for (const auto& f : faces) roots.push_back(f.first_edge);
  return roots;
}

int euler_characteristic(const MapData& map) {
  return static_cast<int>(map.sigma0.cycle_count()) - static_cast<int>(map.sigma1.cycle_count()) +
         static_cast<int>(map.sigma2.cycle_count()) - static_cast<int>(map.roots.size());
}

MapWeight euler_and_weight(const MapData& map) {
  MapWeight w;
  w.h_exponent = -euler_characteristic(map);
  BoundaryStructure boundary(map.sigma2, map.roots);
  for (const auto& cycle : map.sigma2.cycles()) {
    if (boundary.contains(cycle.front())) continue;
    ++w.monomial.t[static_cast<int>(cycle.size())];
  }
  w.aut_divisor = automorphism_count(map);
  return w;
}

std::uint64_t automorphism_count(const MapData& map) {
  return detail::canonical_relabeling(map.sigma0, map.sigma1, map.roots).automorphisms;
}

MapData canonical_form(const MapData& map) {
  detail::Relabeling r = detail::canonical_relabeling(map.sigma0, map.sigma1, map.roots);
  MapData out;
  out.sigma0 = detail::relabel(map.sigma0, r.new_label);
  out.sigma1 = detail::relabel(map.sigma1, r.new_label);
  out.sigma2 = detail::relabel(map.sigma2, r.new_label);
  for (int root : map.roots) out.roots.push_back(r.new_label[root]);
  return out;
}

namespace {

void check_map_bounds(const Partition& lambda, int m_max) {
  if (lambda.empty()) throw InvalidInput("boundary partition must be non-empty");
  if (m_max < 1 || m_max > 6) throw InvalidInput("edge bound outside [1, 6]");
  if (lambda.size() > 2 * m_max) throw InvalidInput("|λ| > 2·m_max: no map has that boundary");
}

}  // namespace

std::map<Partition, OrdinaryAndSimple> enumerate_weighted_batch(const std::vector<Partition>& lambdas, int m_max) {
  std::map<Partition, OrdinaryAndSimple> out;
  if (lambdas.empty()) return out;
  int smallest = lambdas.front().size();
  for (const auto& lambda : lambdas) {
    check_map_bounds(lambda, m_max);
    smallest = std::min(smallest, lambda.size());
    out[lambda] = OrdinaryAndSimple{};
  }
  for (int m = std::max(1, (smallest + 1) / 2); m <= m_max; ++m) {
    std::vector<Partition> active;
    for (const auto& [lambda, series] : out)
      if (lambda.size() <= 2 * m) active.push_back(lambda);
    detail::ConfigurationSweep sweep;
    sweep.ground_size = 2 * m;
    sweep.sigma1_choices = enumerate_fpf_involutions(2 * m);
    sweep.lambdas = active;
    detail::SweepResult result = detail::sweep_configurations(sweep);
    for (std::size_t i = 0; i < active.size(); ++i) {
      out[active[i]].ordinary += result.ordinary[i];
      out[active[i]].fully_simple += result.fully_simple[i];
    }
  }
  return out;
}

LaurentSeries enumerate_weighted(const Partition& lambda, int m_max, bool fully_simple_only) {
  check_map_bounds(lambda, m_max);
  auto batch = enumerate_weighted_batch({lambda}, m_max);
  return fully_simple_only ? batch.at(lambda).fully_simple : batch.at(lambda).ordinary;
}

std::vector<MapData> map_census(int m) {
  if (m < 1 || m > 4) throw InvalidInput("map census is limited to 1 <= m <= 4");
  std::vector<int> images(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < 2 * m; ++i) images[i] = i ^ 1;
  std::vector<MapData> census;
  detail::for_each_rooted_class(2 * m, {Permutation::from_images(images)},
                                [&](const Permutation& s0, const Permutation& s1, const std::vector<int>& roots) {
                                  census.push_back(MapData::from_vertex_edge(s0, s1, roots));
                                });
  return census;
}

}  // namespace fsmaps
