#include "fsmaps/bijection.hpp"

#include <algorithm>

#include "fsmaps/error.hpp"

namespace fsmaps {

namespace detail {
void validate_rooted_triple(const MapData& map);
}

SplitResult forward(const MapData& map) {
  detail::validate_rooted_triple(map);
  BoundaryStructure boundary(map.sigma2, map.roots);
  const std::vector<int>& b = boundary.order();
  const Permutation s0d = boundary_restriction_extended(map.sigma0, b);

  SplitResult out;
  Permutation f2 = map.sigma2 * s0d;
  std::vector<int> roots = select_roots(f2, boundary);
  out.fully_simple = MapData{s0d.inverse() * map.sigma0, map.sigma1, f2, std::move(roots)};

  std::vector<int> dessin_roots;
  for (int r : map.roots) dessin_roots.push_back(boundary.rank(r));
  out.dessin = DessinData{boundary_restriction(f2, b).inverse(), boundary_restriction(map.sigma2, b),
                          boundary_restriction(map.sigma0, b), std::move(dessin_roots)};
  out.embedding = b;
  return out;
}

namespace {

void check_reverse_inputs(const MapData& fully_simple, const DessinData& dessin) {
  detail::validate_rooted_triple(fully_simple);
  validate_dessin(dessin);
  if (!is_fully_simple(fully_simple)) throw InvalidInput("reverse: the map is not fully simple");
  BoundaryStructure boundary(fully_simple.sigma2, fully_simple.roots);
  if (boundary.size() != dessin.size()) throw InvalidInput("reverse: boundary size differs from the dessin edge count");
  if (boundary_restriction(fully_simple.sigma2, boundary.order()).cycle_type() != dessin.tau_r.cycle_type())
    throw InvalidInput("reverse: boundary degrees differ from the red degrees");
}

}  // namespace

std::vector<int> reverse_embedding(const MapData& fully_simple, const DessinData& dessin) {
  check_reverse_inputs(fully_simple, dessin);
  BoundaryStructure dessin_order(dessin.tau_b, dessin.roots);

  struct Cycle {
    int length;
    int first_rank;
    int first_edge;
  };
  std::vector<Cycle> cycles;
  for (const auto& c : dessin.tau_r.cycles()) {
    int best = c.front();
    for (int x : c)
      if (dessin_order.rank(x) < dessin_order.rank(best)) best = x;
    cycles.push_back(Cycle{static_cast<int>(c.size()), dessin_order.rank(best), best});
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    return a.length != b.length ? a.length > b.length : a.first_rank < b.first_rank;
  });

  BoundaryStructure face_order(fully_simple.sigma2, fully_simple.roots);
  std::vector<std::size_t> faces(fully_simple.roots.size());
  for (std::size_t i = 0; i < faces.size(); ++i) faces[i] = i;
  std::stable_sort(faces.begin(), faces.end(), [&](std::size_t a, std::size_t b) {
    return face_order.degrees()[a] > face_order.degrees()[b];
  });

  const Permutation tau_r_inverse = dessin.tau_r.inverse();
  std::vector<int> embedding(dessin.size(), -1);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    int x = cycles[i].first_edge;
    int y = fully_simple.roots[faces[i]];
    for (int step = 0; step < cycles[i].length; ++step) {
      embedding[x] = y;
      x = tau_r_inverse(x);
      y = fully_simple.sigma2(y);
    }
  }
  return embedding;
}

std::vector<int> order_preserving_embedding(const MapData& fully_simple, const DessinData& dessin) {
  check_reverse_inputs(fully_simple, dessin);
  BoundaryStructure dessin_order(dessin.tau_b, dessin.roots);
  BoundaryStructure face_order(fully_simple.sigma2, fully_simple.roots);
  std::vector<int> embedding(dessin.size());
  for (std::size_t i = 0; i < dessin.size(); ++i) embedding[dessin_order.order()[i]] = face_order.order()[i];
  return embedding;
}

MapData reverse_with_embedding(const MapData& fully_simple, const DessinData& dessin, std::span<const int> embedding) {
  if (embedding.size() != dessin.size()) throw InvalidInput("reverse: embedding of the wrong size");
  std::vector<int> images = Permutation(fully_simple.size()).images();
  for (std::size_t x = 0; x < dessin.size(); ++x) images[embedding[x]] = embedding[dessin.tau_v(static_cast<int>(x))];
  const Permutation tv = Permutation::from_images(std::move(images));
  std::vector<int> roots;
  for (int r : dessin.roots) roots.push_back(embedding[r]);
  return MapData{tv * fully_simple.sigma0, fully_simple.sigma1, fully_simple.sigma2 * tv.inverse(), std::move(roots)};
}

MapData reverse(const MapData& fully_simple, const DessinData& dessin) {
  return reverse_with_embedding(fully_simple, dessin, reverse_embedding(fully_simple, dessin));
}

bool boundary_restriction_lemma_check(const Permutation& sigma, std::span<const int> subset) {
  const Permutation p = boundary_restriction_extended(sigma, subset).inverse() * sigma;
  std::vector<char> in(sigma.size(), 0);
  for (int x : subset) in[x] = 1;
  for (const auto& cycle : p.cycles()) {
    int hits = 0;
    for (int x : cycle) hits += in[x];
    if (hits > 1) return false;
  }
  return true;
}

bool restriction_homomorphism_check(const Permutation& a, const Permutation& b, std::span<const int> subset) {
  const Permutation left = boundary_restriction(a, subset) * b;
  const Permutation right = boundary_restriction(a * boundary_extension(b, subset, a.size()), subset);
  return left == right;
}

bool weight_bookkeeping_check(const MapData& map) {
  BoundaryStructure boundary(map.sigma2, map.roots);
  const auto& b = boundary.order();
  const Permutation s0d = boundary_restriction_extended(map.sigma0, b);
  const long lhs = static_cast<long>(b.size()) - static_cast<long>(boundary_restriction(map.sigma0, b).cycle_count());
  const long rhs = static_cast<long>((s0d.inverse() * map.sigma0).cycle_count()) -
                   static_cast<long>(map.sigma0.cycle_count());
  if (lhs != rhs) return false;
  const SplitResult split = forward(map);
  return -euler_characteristic(map) == -euler_characteristic(split.fully_simple) + split.dessin.k();
}

}  // namespace fsmaps
