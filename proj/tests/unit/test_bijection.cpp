#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fsmaps/bijection.hpp"
#include "fsmaps/error.hpp"
#include "fsmaps/hypermap.hpp"
#include "fsmaps/simplifier.hpp"
#include "support.hpp"

using namespace fsmaps;
using fsmaps::test::make_map;
using fsmaps::test::P;

namespace {

MapData loop2() { return make_map(P(2, {{1, 2}}), P(2, {{1, 2}}), {1, 2}); }

std::vector<std::vector<int>> internal_cycles(const MapData& m) {
  const BoundaryStructure b(m.sigma2, m.roots);
  std::vector<std::vector<int>> out;
  for (auto& c : m.sigma2.cycles())
    if (!b.contains(c.front())) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("splitting the two-rooted loop") {
  const SplitResult s = forward(loop2());
  CHECK(s.fully_simple.sigma0.is_identity());
  CHECK(s.fully_simple.sigma1 == P(2, {{1, 2}}));
  CHECK(s.fully_simple.sigma2 == P(2, {{1, 2}}));
  CHECK(s.fully_simple.roots == std::vector<int>{0});
  CHECK(s.dessin.tau_r == P(2, {{1, 2}}));
  CHECK(s.dessin.tau_b.is_identity());
  CHECK(s.dessin.tau_v == P(2, {{1, 2}}));
  CHECK(s.dessin.roots == std::vector<int>{0, 1});
  CHECK(s.embedding == std::vector<int>{0, 1});
  CHECK(reverse(s.fully_simple, s.dessin) == loop2());
}

TEST_CASE("fully simple maps split into themselves and a trivial dessin") {
  for (const auto& m : map_census(2)) {
    if (!is_fully_simple(m)) continue;
    const SplitResult s = forward(m);
    CHECK(s.fully_simple.sigma0 == m.sigma0);
    CHECK(s.fully_simple.sigma2 == m.sigma2);
    CHECK(s.dessin.tau_v.is_identity());
    CHECK(s.dessin.k() == 0);
    const MapData back = reverse(s.fully_simple, s.dessin);
    CHECK(back == m);
  }
}

TEST_CASE("reverse rejects incompatible inputs") {
  const SplitResult s = forward(loop2());
  CHECK_THROWS_AS(reverse(loop2(), s.dessin), InvalidInput);
  DessinData wrong = DessinData::from_blue_vertex(Permutation(2), Permutation(2), {0, 1});
  CHECK_THROWS_AS(reverse(s.fully_simple, wrong), InvalidInput);
}

TEST_CASE("round trip and bookkeeping on the m <= 3 census") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& map : map_census(m)) {
      const SplitResult s = forward(map);
      validate(s.fully_simple);
      validate_dessin(s.dessin);
      CHECK(is_fully_simple(s.fully_simple));
      CHECK(reverse(s.fully_simple, s.dessin) == map);
      CHECK(weight_bookkeeping_check(map));
      const BoundaryStructure b(map.sigma2, map.roots);
      CHECK(BoundaryStructure(s.dessin.tau_b, s.dessin.roots).degrees() == b.degrees());
      CHECK(Partition(BoundaryStructure(s.fully_simple.sigma2, s.fully_simple.roots).degrees()) ==
            s.dessin.tau_r.cycle_type());
      CHECK(internal_cycles(map) == internal_cycles(s.fully_simple));
      const SimplificationResult r = simplify(map);
      CHECK(s.fully_simple == r.simple_map);
      CHECK(s.dessin.k() == r.k());
    }
}

TEST_CASE("reverse with the identity vertex permutation") {
  const MapData f = make_map(P(4, {{1, 3}, {2, 4}}), P(4, {{1, 2}, {3, 4}}), {1});
  REQUIRE(is_fully_simple(f));
  // boundary face (1 4) of degree 2; dessin with one blue face of degree 2
  const DessinData d = DessinData::from_blue_vertex(P(2, {{1, 2}}), Permutation(2), {0});
  const MapData m = reverse(f, d);
  CHECK(m.sigma0 == f.sigma0);
  CHECK(m.sigma2 == f.sigma2);
}

TEST_CASE("restriction lemmas") {
  CHECK(boundary_restriction_lemma_check(P(2, {{1, 2}}), std::vector<int>{0, 1}));
  CHECK(boundary_restriction_lemma_check(P(5, {{1, 2, 3}}), std::vector<int>{}));
  const Permutation a = P(6, {{1, 4, 2}, {3, 6}});
  const std::vector<int> subset{4, 0, 2};
  CHECK(restriction_homomorphism_check(a, Permutation(3), subset));
  CHECK(restriction_homomorphism_check(Permutation(6), P(3, {{1, 3, 2}}), subset));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> images(8);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation sigma = Permutation::from_images(images);
    std::vector<int> b;
    for (int i = 0; i < 8; ++i)
      if (rng() % 2) b.push_back(i);
    std::shuffle(b.begin(), b.end(), rng);
    CHECK(boundary_restriction_lemma_check(sigma, b));
    std::vector<int> small(b.size());
    std::iota(small.begin(), small.end(), 0);
    std::shuffle(small.begin(), small.end(), rng);
    CHECK(restriction_homomorphism_check(sigma, Permutation::from_images(small), b));
  }
}

TEST_CASE("weight bookkeeping") {
  CHECK(weight_bookkeeping_check(loop2()));
  CHECK(weight_bookkeeping_check(make_map(Permutation(2), P(2, {{1, 2}}), {1})));
}

TEST_CASE("the order-preserving identification is not enough") {
  // Boundary faces of degree 1 and 2 in that root order; F reorders them.
  MapData m;
  m.sigma0 = P(4, {{1, 2}});
  m.sigma1 = P(4, {{1, 2}, {3, 4}});
  m.sigma2 = P(4, {{3, 4}});
  m.roots = {0, 2};
  validate(m);
  const SplitResult s = forward(m);
  CHECK(reverse(s.fully_simple, s.dessin) == m);
  const auto literal = order_preserving_embedding(s.fully_simple, s.dessin);
  CHECK_FALSE(reverse_with_embedding(s.fully_simple, s.dessin, literal) == m);
}

TEST_CASE("hypermaps pass through the bijection") {
  for (int e = 1; e <= 3; ++e)
    for (const auto& h : hypermap_census(e)) {
      const SplitResult s = forward(h);
      CHECK(reverse(s.fully_simple, s.dessin) == h);
    }
}
