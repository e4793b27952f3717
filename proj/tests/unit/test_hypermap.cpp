#include <doctest.h>

#include "fsmaps/error.hpp"
#include "fsmaps/hurwitz.hpp"
#include "fsmaps/hypermap.hpp"
#include "fsmaps/symgrp.hpp"
#include "support.hpp"

using namespace fsmaps;
using fsmaps::test::make_map;
using fsmaps::test::P;

namespace {

std::string error_of(const MapData& h) {
  try {
    validate_hypermap(h);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("hypermap validation") {
  for (const auto& m : map_census(2)) CHECK(error_of(m).empty());
  const MapData trivial = make_map(Permutation(1), Permutation(1), {1});
  CHECK(error_of(trivial).empty());
  const MapData shared = make_map(Permutation(2), P(2, {{1, 2}}), {1, 2});
  CHECK(error_of(shared) == "roots share a face");
}

TEST_CASE("hypermap weights") {
  const MapData trivial = make_map(Permutation(1), Permutation(1), {1});
  const MapWeight w = hypermap_weight(trivial);
  CHECK(w.monomial == Monomial::u_power(1));
  CHECK(hypermap_euler_characteristic(trivial) == 1);
  CHECK(w.h_exponent == -1);
  for (int m = 1; m <= 3; ++m)
    for (const auto& map : map_census(m)) {
      const MapWeight hw = hypermap_weight(map), mw = euler_and_weight(map);
      CHECK(hw.monomial.u == std::map<int, int>{{2, m}});
      CHECK(hw.monomial.t == mw.monomial.t);
      CHECK(hw.h_exponent == mw.h_exponent);
      CHECK(hw.aut_divisor == mw.aut_divisor);
    }
}

TEST_CASE("blue and red degrees both add up to the edge count") {
  for (int e = 1; e <= 4; ++e)
    for (const auto& h : hypermap_census(e)) {
      const MapWeight w = hypermap_weight(h);
      int red = 0;
      for (const auto& [i, k] : w.monomial.u) red += i * k;
      CHECK(red == e);
      const BoundaryStructure b(h.sigma2, h.roots);
      CHECK(w.monomial.t_degree() + static_cast<int>(b.size()) == e);
    }
}

TEST_CASE("small hypermap enumerations") {
  const LaurentSeries one = enumerate_hypermaps({1}, 1, false);
  CHECK(one.to_string() == "h^-1*u1");
  CHECK(enumerate_hypermaps({1}, 1, true) == one);
  CHECK_THROWS_AS(enumerate_hypermaps({3}, 2, false), InvalidInput);
  for (const auto& l : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}}) {
    const auto all = enumerate_hypermaps(l, 3, false), fs = enumerate_hypermaps(l, 3, true);
    const auto diff = all - fs;
    for (const auto& [e, poly] : diff.coefficients())
      for (const auto& [mono, c] : poly) CHECK(c > 0);
  }
}

TEST_CASE("involutive specialization reproduces maps") {
  for (const auto& l : std::vector<Partition>{{1}, {2}, {1, 1}, {3}, {2, 1}, {2, 2}}) {
    for (bool fs : {false, true}) {
      const auto h = enumerate_hypermaps(l, 4, fs, true).evaluate_u(2, 1);
      CHECK(h.coefficients() == enumerate_weighted(l, 2, fs).coefficients());
    }
  }
}

TEST_CASE("hypermap transition identity") {
  CHECK(enumerate_hypermaps({1}, 3, false).coefficients() == enumerate_hypermaps({1}, 3, true).coefficients());
  for (int d = 1; d <= 3; ++d)
    for (const auto& l : partitions_of(d)) CHECK(hypermap_theorem_check(l, 3));
  CHECK(hypermap_theorem_check({2}, 4));
  CHECK(hypermap_theorem_check({1, 1}, 4));
}

TEST_CASE("hypermap census counts classes") {
  CHECK(hypermap_census(1).size() == 1);
  CHECK(hypermap_census(2).size() == 6);
  CHECK_THROWS_AS(hypermap_census(5), InvalidInput);
}
