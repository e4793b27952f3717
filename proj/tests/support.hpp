#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "fsmaps/mapcore.hpp"
#include "fsmaps/permutation.hpp"

namespace fsmaps::test {

// 1-based cycles on n points.
inline Permutation P(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  return Permutation::from_cycles(n, cycles);
}

inline MapData make_map(const Permutation& s0, const Permutation& s1, std::vector<int> roots_one_based) {
  for (int& r : roots_one_based) --r;
  return MapData::from_vertex_edge(s0, s1, roots_one_based);
}

// Calls visit on every permutation of {0..n-1}.
template <class F>
void for_each_permutation(int n, F visit) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do visit(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
}

// |Aut| by trying every relabelling.
inline std::uint64_t brute_automorphisms(const MapData& m) {
  std::uint64_t count = 0;
  for_each_permutation(static_cast<int>(m.size()), [&](const Permutation& phi) {
    for (int r : m.roots)
      if (phi(r) != r) return;
    if (phi * m.sigma0 == m.sigma0 * phi && phi * m.sigma1 == m.sigma1 * phi) ++count;
  });
  return count;
}

// χ_ρ(λ) as the coefficient of x^(ρ+δ) in Δ(x)·p_λ(x), with ℓ(ρ) variables.
inline long frobenius_character(const Partition& rho, const Partition& lambda) {
  const int n = rho.length();
  using Poly = std::map<std::vector<int>, long>;
  auto mul = [](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        std::vector<int> e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out[e] += ca * cb;
      }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };
  Poly acc{{std::vector<int>(n, 0), 1}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> ei(n, 0), ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      acc = mul(acc, Poly{{ei, 1}, {ej, -1}});
    }
  for (int part : lambda.parts()) {
    Poly power;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = part;
      power[e] += 1;
    }
    acc = mul(acc, power);
  }
  std::vector<int> target(n);
  for (int i = 0; i < n; ++i) target[i] = rho[i] + n - 1 - i;
  auto it = acc.find(target);
  return it == acc.end() ? 0 : it->second;
}

}  // namespace fsmaps::test
