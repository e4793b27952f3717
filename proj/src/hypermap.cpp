#include "fsmaps/hypermap.hpp"

#include <numeric>

#include "canonical.hpp"
#include "enumeration.hpp"
#include "fsmaps/error.hpp"
#include "fsmaps/hurwitz.hpp"
#include "fsmaps/symgrp.hpp"

namespace fsmaps {

namespace detail {
void validate_rooted_triple(const MapData& map);
}

void validate_hypermap(const HypermapData& hypermap) { detail::validate_rooted_triple(hypermap); }

int hypermap_euler_characteristic(const HypermapData& h) {
  return static_cast<int>(h.sigma0.cycle_count()) - static_cast<int>(h.size()) +
         static_cast<int>(h.sigma1.cycle_count()) + static_cast<int>(h.sigma2.cycle_count()) -
         static_cast<int>(h.roots.size());
}

MapWeight hypermap_weight(const HypermapData& h) {
  validate_hypermap(h);
  MapWeight w;
  w.h_exponent = -hypermap_euler_characteristic(h);
  BoundaryStructure boundary(h.sigma2, h.roots);
  for (const auto& cycle : h.sigma2.cycles())
    if (!boundary.contains(cycle.front())) ++w.monomial.t[static_cast<int>(cycle.size())];
  for (const auto& cycle : h.sigma1.cycles()) ++w.monomial.u[static_cast<int>(cycle.size())];
  w.aut_divisor = automorphism_count(h);
  return w;
}

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

LaurentSeries enumerate_hypermaps(const Partition& lambda, int e_max, bool fully_simple_only, bool involutive_only) {
  if (lambda.empty()) throw InvalidInput("boundary partition must be non-empty");
  if (e_max < 1 || e_max > 6) throw InvalidInput("edge bound outside [1, 6]");
  if (lambda.size() > e_max) throw InvalidInput("|λ| > e_max: no hypermap has that boundary");
  LaurentSeries total;
  for (int e = std::max(1, lambda.size()); e <= e_max; ++e) {
    if (involutive_only && e % 2 != 0) continue;
    detail::ConfigurationSweep sweep;
    sweep.ground_size = e;
    sweep.sigma1_choices = involutive_only ? enumerate_fpf_involutions(e) : all_permutations(e);
    sweep.lambdas = {lambda};
    sweep.record_hyperedges = true;
    detail::SweepResult result = detail::sweep_configurations(sweep);
    total += fully_simple_only ? result.fully_simple.front() : result.ordinary.front();
  }
  return total;
}

bool hypermap_theorem_check(const Partition& lambda, int e_max) {
  const LaurentSeries left = enumerate_hypermaps(lambda, e_max, false);
  LaurentSeries right;
  const Rational z(static_cast<unsigned long>(z_factor(lambda)));
  for (const auto& mu : partitions_of(lambda.size())) {
    LaurentSeries term = strict_character(lambda, mu).series * enumerate_hypermaps(mu, e_max, true);
    right += term * z;
  }
  return left.coefficients() == right.coefficients();
}

std::vector<HypermapData> hypermap_census(int e) {
  if (e < 1 || e > 4) throw InvalidInput("hypermap census is limited to 1 <= e <= 4");
  std::vector<HypermapData> census;
  detail::for_each_rooted_class(e, all_permutations(e),
                                [&](const Permutation& s0, const Permutation& s1, const std::vector<int>& roots) {
                                  census.push_back(MapData::from_vertex_edge(s0, s1, roots));
                                });
  return census;
}

}  // namespace fsmaps
