#include "fsmaps/dessin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "canonical.hpp"
#include "fsmaps/error.hpp"
#include "fsmaps/hurwitz.hpp"

namespace fsmaps {

DessinData DessinData::from_blue_vertex(Permutation tau_b, Permutation tau_v, std::vector<int> roots) {
  Permutation tau_r = (tau_b * tau_v).inverse();
  return DessinData{std::move(tau_r), std::move(tau_b), std::move(tau_v), std::move(roots)};
}

int DessinData::k() const { return static_cast<int>(size()) - static_cast<int>(tau_v.cycle_count()); }

void validate_dessin(const DessinData& dessin) {
  const std::size_t n = dessin.tau_b.size();
  if (n == 0) throw InvalidInput("empty edge set");
  if (dessin.tau_r.size() != n || dessin.tau_v.size() != n) throw InvalidInput("permutations of different sizes");
  if (!(dessin.tau_r * dessin.tau_b * dessin.tau_v).is_identity()) throw InvalidInput("tau_r*tau_b*tau_v != id");
  std::vector<int> face(n);
  auto cycles = dessin.tau_b.cycles();
  for (std::size_t f = 0; f < cycles.size(); ++f)
    for (int x : cycles[f]) face[x] = static_cast<int>(f);
  std::vector<char> rooted(cycles.size(), 0);
  for (int r : dessin.roots) {
    if (r < 0 || static_cast<std::size_t>(r) >= n) throw InvalidInput("root outside the edge set");
    if (rooted[face[r]]) throw InvalidInput("roots share a blue face");
    rooted[face[r]] = 1;
  }
  if (std::find(rooted.begin(), rooted.end(), 0) != rooted.end()) throw InvalidInput("blue face without a root");
}

Permutation product_of(const std::vector<Transposition>& sequence, std::size_t n) {
  Permutation p(n);
  for (auto [a, b] : sequence) p = p * Permutation::transposition(n, a, b);
  return p;
}

std::vector<Transposition> monotone_factorization(const Permutation& p) {
  std::vector<Transposition> seq;
  for (auto cycle : p.cycles()) {
    // c = (a1 .. a_{m-1}) (a_{m-1} a_m) with a_m the maximum; the peeled
    // transpositions have decreasing larger elements, so prepend.
    std::vector<Transposition> local;
    while (cycle.size() > 1) {
      auto top = std::max_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), top + 1, cycle.end());
      const int max = cycle.back();
      const int pred = cycle[cycle.size() - 2];
      local.insert(local.begin(), Transposition{std::min(pred, max), std::max(pred, max)});
      cycle.pop_back();
    }
    seq.insert(seq.end(), local.begin(), local.end());
  }

  // Bubble into increasing larger elements using
  //   (a b)(c d) = (c d)(a b), (a c)(a b) = (a b)(b c), (b c)(a b) = (a b)(a c)  for a < b < c.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      auto x = seq[i], y = seq[i + 1];
      if (x.second <= y.second) continue;
      changed = true;
      const bool disjoint = x.first != y.first && x.first != y.second && x.second != y.first && x.second != y.second;
      if (disjoint) {
        std::swap(seq[i], seq[i + 1]);
      } else if (x.first == y.first) {
        const int a = x.first, b = y.second, c = x.second;
        seq[i] = {a, b};
        seq[i + 1] = {b, c};
      } else if (x.first == y.second) {
        const int a = y.first, b = x.first, c = x.second;
        seq[i] = {a, b};
        seq[i + 1] = {a, c};
      } else {
        throw std::logic_error("monotone_factorization: unexpected overlap");
      }
    }
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i].second >= seq[i + 1].second) throw std::logic_error("monotone_factorization: not strictly monotone");
  return seq;
}

std::vector<std::vector<Transposition>> all_monotone_sequences(int d) {
  if (d < 1) throw InvalidInput("d must be positive");
  std::vector<std::vector<Transposition>> out;
  std::vector<Transposition> current;
  std::function<void(int)> rec = [&](int next_b) {
    out.push_back(current);
    for (int b = next_b; b < d; ++b) {
      for (int a = 0; a < b; ++a) {
        current.emplace_back(a, b);
        rec(b + 1);
        current.pop_back();
      }
    }
  };
  rec(1);
  return out;
}

std::uint64_t count_monotone_sequences(int d) { return all_monotone_sequences(d).size(); }

namespace {

// Calls visit(roots) for every ordered root tuple with one root per blue
// cycle; with `lambda`, root j must lie on a cycle of length λ_j.
void for_each_root_tuple(const std::vector<std::vector<int>>& cycles, const Partition* lambda,
                         const std::function<void(const std::vector<int>&)>& visit, bool first_root_zero = false) {
  std::vector<char> used(cycles.size(), 0);
  std::vector<int> roots;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == cycles.size()) {
      visit(roots);
      return;
    }
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (used[c] || (lambda && static_cast<int>(cycles[c].size()) != (*lambda)[j])) continue;
      used[c] = 1;
      for (int x : cycles[c]) {
        if (first_root_zero && j == 0 && x != 0) continue;
        roots.push_back(x);
        rec(j + 1);
        roots.pop_back();
      }
      used[c] = 0;
    }
  };
  rec(0);
}

void require_dessin_size(const Partition& lambda) {
  if (lambda.empty()) throw InvalidInput("partitions must be non-empty");
  if (lambda.size() > 7) throw InvalidInput("dessin enumeration is limited to |λ| <= 7");
}

}  // namespace

std::map<std::pair<Partition, int>, Rational> dessin_table(const Partition& lambda) {
  require_dessin_size(lambda);
  const int d = lambda.size();
  std::map<std::pair<Partition, int>, long> counts;
  std::vector<int> blue(static_cast<std::size_t>(d));
  std::iota(blue.begin(), blue.end(), 0);
  do {
    Permutation tau_b = Permutation::from_images(blue);
    if (tau_b.cycle_type() != lambda) continue;
    long root_tuples = 0;
    for_each_root_tuple(tau_b.cycles(), &lambda, [&](const std::vector<int>&) { ++root_tuples; });
    std::vector<int> vertex(static_cast<std::size_t>(d));
    std::iota(vertex.begin(), vertex.end(), 0);
    do {
      Permutation tau_v = Permutation::from_images(vertex);
      Permutation tau_r = (tau_b * tau_v).inverse();
      const int k = d - static_cast<int>(tau_v.cycle_count());
      counts[{tau_r.cycle_type(), k}] += root_tuples;
    } while (std::next_permutation(vertex.begin(), vertex.end()));
  } while (std::next_permutation(blue.begin(), blue.end()));

  std::map<std::pair<Partition, int>, Rational> out;
  const Rational d_factorial(static_cast<unsigned long>(factorial(d)));
  for (const auto& [key, c] : counts) out[key] = Rational(c) / d_factorial;
  return out;
}

Rational enumerate_dessins(const Partition& lambda, const Partition& mu, int k) {
  if (lambda.size() != mu.size()) throw InvalidInput("size mismatch: |λ| != |μ|");
  auto table = dessin_table(lambda);
  auto it = table.find({mu, k});
  return it == table.end() ? Rational(0) : it->second;
}

bool dessin_hurwitz_identity(const Partition& lambda, const Partition& mu, int k) {
  const Rational left = enumerate_dessins(lambda, mu, k);
  const Rational right = k < 0 ? Rational(0)
                               : Rational(static_cast<unsigned long>(z_factor(lambda))) * strict_brute(lambda, mu, k);
  return left == right;
}

std::vector<DessinClass> dessin_census(int n) {
  if (n < 1 || n > 6) throw InvalidInput("dessin census is limited to 1 <= n <= 6");
  std::map<std::string, std::uint64_t> classes;
  std::vector<int> blue(static_cast<std::size_t>(n));
  std::iota(blue.begin(), blue.end(), 0);
  do {
    Permutation tau_b = Permutation::from_images(blue);
    const auto cycles = tau_b.cycles();
    std::vector<int> vertex(static_cast<std::size_t>(n));
    std::iota(vertex.begin(), vertex.end(), 0);
    do {
      Permutation tau_v = Permutation::from_images(vertex);
      for_each_root_tuple(
          cycles, nullptr,
          [&](const std::vector<int>& roots) {
            ++classes[detail::canonical_key(tau_b, tau_v, roots)];
          },
          true);
    } while (std::next_permutation(vertex.begin(), vertex.end()));
  } while (std::next_permutation(blue.begin(), blue.end()));

  std::vector<DessinClass> out;
  for (const auto& [key, count] : classes) {
    const auto size = static_cast<std::size_t>(key[0]);
    std::vector<int> a(size), b(size);
    for (std::size_t x = 0; x < size; ++x) {
      a[x] = key[1 + x];
      b[x] = key[1 + size + x];
    }
    std::vector<int> roots;
    for (std::size_t i = 1 + 2 * size; i < key.size(); ++i) roots.push_back(key[i]);
    out.push_back(DessinClass{DessinData::from_blue_vertex(Permutation::from_images(std::move(a)),
                                                           Permutation::from_images(std::move(b)), std::move(roots)),
                              count});
  }
  return out;
}

}  // namespace fsmaps
