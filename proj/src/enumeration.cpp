#include "enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <unordered_map>

#include "fsmaps/error.hpp"
#include "fsmaps/parallel.hpp"

namespace fsmaps::detail {

namespace {

using Histogram = std::array<std::uint8_t, kMaxGround + 1>;

// Everything the weight of a configuration depends on, apart from the roots.
struct Signature {
  std::int8_t vertices = 0;
  std::int8_t hyperedges = 0;
  Histogram faces{};
  Histogram hyperedge_degrees{};
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint8_t byte) { h = (h ^ byte) * 1099511628211ull; };
    mix(static_cast<std::uint8_t>(s.vertices));
    mix(static_cast<std::uint8_t>(s.hyperedges));
    for (auto b : s.faces) mix(b);
    for (auto b : s.hyperedge_degrees) mix(b);
    return static_cast<std::size_t>(h);
  }
};

struct Tally {
  std::int64_t configurations = 0;
  std::vector<std::int64_t> simple_face_sets;  // per lambda: unordered sets of boundary faces with σ0^∂ = id
};

using TallyMap = std::unordered_map<Signature, Tally, SignatureHash>;

struct PartShape {
  std::vector<std::pair<int, int>> multiplicities;  // (part, m_part), decreasing part
  std::int64_t part_product = 1;                    // Π λ_i: choice of root inside each face
  std::int64_t multiplicity_factorials = 1;         // Π m_j!: orderings of equal-degree faces
};

struct Face {
  int length;
  std::uint32_t vertex_mask;
  bool simple;  // meets each vertex at most once
};

// Counts sets of pairwise vertex-disjoint simple faces realising the multiplicities.
std::int64_t count_simple_face_sets(const std::vector<std::vector<std::uint32_t>>& simple_by_length,
                                    const PartShape& shape, std::size_t part_index, std::size_t start,
                                    int remaining, std::uint32_t used) {
  if (part_index == shape.multiplicities.size()) return 1;
  auto [part, mult] = shape.multiplicities[part_index];
  if (remaining == 0) {
    std::size_t next = part_index + 1;
    int next_remaining = next < shape.multiplicities.size() ? shape.multiplicities[next].second : 0;
    return count_simple_face_sets(simple_by_length, shape, next, 0, next_remaining, used);
  }
  const auto& candidates = simple_by_length[static_cast<std::size_t>(part)];
  std::int64_t total = 0;
  for (std::size_t i = start; i < candidates.size(); ++i) {
    if (candidates[i] & used) continue;
    total += count_simple_face_sets(simple_by_length, shape, part_index, i + 1, remaining - 1, used | candidates[i]);
  }
  return total;
}

std::int64_t falling(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace

SweepResult sweep_configurations(const ConfigurationSweep& sweep) {
  const int n = sweep.ground_size;
  if (n < 1 || n > kMaxGround) throw InvalidInput("configuration sweep: ground size outside [1, 16]");

  std::vector<PartShape> shapes;
  for (const auto& lambda : sweep.lambdas) {
    PartShape shape;
    for (int p : lambda.parts()) {
      shape.part_product *= p;
      if (shape.multiplicities.empty() || shape.multiplicities.back().first != p)
        shape.multiplicities.emplace_back(p, 0);
      ++shape.multiplicities.back().second;
    }
    for (auto [p, m] : shape.multiplicities) shape.multiplicity_factorials *= falling(m, m);
    shapes.push_back(std::move(shape));
  }

  struct Sigma1Info {
    std::vector<int> images;
    int cycles;
    Histogram degrees{};
  };
  std::vector<Sigma1Info> sigma1_info;
  for (const auto& s1 : sweep.sigma1_choices) {
    if (static_cast<int>(s1.size()) != n) throw InvalidInput("configuration sweep: σ1 of the wrong size");
    Sigma1Info info{s1.images(), 0, {}};
    for (const auto& c : s1.cycles()) {
      ++info.cycles;
      ++info.degrees[c.size()];
    }
    sigma1_info.push_back(std::move(info));
  }

  const unsigned workers = thread_count();
  std::vector<TallyMap> tallies(workers);
  const std::size_t items = sigma1_info.size() * static_cast<std::size_t>(n);

  parallel_for(items, [&](std::size_t item, unsigned worker) {
    TallyMap& tally = tallies[worker];
    const Sigma1Info& s1 = sigma1_info[item / static_cast<std::size_t>(n)];
    const int first = static_cast<int>(item % static_cast<std::size_t>(n));

    std::array<int, kMaxGround> p0{};
    p0[0] = first;
    for (int i = 1, v = 0; i < n; ++i, ++v) p0[i] = (v == first) ? ++v : v;

    std::array<int, kMaxGround> sigma2{};
    std::array<int, kMaxGround> vertex{};
    std::array<char, kMaxGround> seen{};
    std::vector<std::vector<std::uint32_t>> simple_by_length(static_cast<std::size_t>(n) + 1);

    do {
      for (int x = 0; x < n; ++x) sigma2[p0[s1.images[x]]] = x;

      int vertices = 0;
      seen.fill(0);
      for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        for (int y = x; !seen[y]; y = p0[y]) {
          seen[y] = 1;
          vertex[y] = vertices;
        }
        ++vertices;
      }

      Signature sig;
      sig.vertices = static_cast<std::int8_t>(vertices);
      sig.hyperedges = static_cast<std::int8_t>(s1.cycles);
      if (sweep.record_hyperedges) sig.hyperedge_degrees = s1.degrees;

      for (auto& bucket : simple_by_length) bucket.clear();
      seen.fill(0);
      for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        Face f{0, 0, true};
        for (int y = x; !seen[y]; y = sigma2[y]) {
          seen[y] = 1;
          ++f.length;
          std::uint32_t bit = 1u << vertex[y];
          if (f.vertex_mask & bit) f.simple = false;
          f.vertex_mask |= bit;
        }
        ++sig.faces[f.length];
        if (f.simple) simple_by_length[f.length].push_back(f.vertex_mask);
      }

      auto [it, inserted] = tally.try_emplace(sig);
      Tally& t = it->second;
      if (inserted) t.simple_face_sets.assign(shapes.size(), 0);
      ++t.configurations;
      for (std::size_t l = 0; l < shapes.size(); ++l) {
        const PartShape& shape = shapes[l];
        bool possible = true;
        for (auto [p, m] : shape.multiplicities)
          if (p > n || static_cast<int>(simple_by_length[p].size()) < m) possible = false;
        if (!possible) continue;
        t.simple_face_sets[l] +=
            count_simple_face_sets(simple_by_length, shape, 0, 0, shape.multiplicities.front().second, 0);
      }
    } while (std::next_permutation(p0.begin() + 1, p0.begin() + n));
  });

  TallyMap merged;
  for (auto& tally : tallies) {
    for (auto& [sig, t] : tally) {
      auto [it, inserted] = merged.try_emplace(sig);
      if (inserted) it->second.simple_face_sets.assign(shapes.size(), 0);
      it->second.configurations += t.configurations;
      for (std::size_t l = 0; l < shapes.size(); ++l) it->second.simple_face_sets[l] += t.simple_face_sets[l];
    }
  }

  Rational labelings = 1;
  for (int i = 2; i <= n; ++i) labelings *= i;

  SweepResult result;
  for (std::size_t l = 0; l < shapes.size(); ++l) {
    const PartShape& shape = shapes[l];
    const int ell = sweep.lambdas[l].length();
    LaurentSeries ordinary(ell - 2 * n, LaurentSeries::kExact);
    LaurentSeries simple(ell - 2 * n, LaurentSeries::kExact);
    for (const auto& [sig, t] : merged) {
      std::int64_t arrangements = 1;
      for (auto [p, m] : shape.multiplicities) {
        if (p > n || sig.faces[p] < m) {
          arrangements = 0;
          break;
        }
        arrangements *= falling(sig.faces[p], m);
      }
      if (arrangements == 0) continue;

      int face_count = 0;
      for (auto f : sig.faces) face_count += f;
      const int chi = sig.vertices - n + sig.hyperedges + face_count - ell;

      Monomial monomial;
      Histogram internal = sig.faces;
      for (auto [p, m] : shape.multiplicities) internal[p] = static_cast<std::uint8_t>(internal[p] - m);
      for (int k = 1; k <= kMaxGround; ++k) {
        if (internal[k]) monomial.t[k] = internal[k];
        if (sweep.record_hyperedges && sig.hyperedge_degrees[k]) monomial.u[k] = sig.hyperedge_degrees[k];
      }

      const Rational roots_per_face_set = Rational(static_cast<long>(shape.part_product)) / labelings;
      ordinary.add_term(-chi,
                        Rational(static_cast<long>(t.configurations)) * Rational(static_cast<long>(arrangements)) *
                            roots_per_face_set,
                        monomial);
      if (t.simple_face_sets[l]) {
        simple.add_term(-chi,
                        Rational(static_cast<long>(t.simple_face_sets[l])) *
                            Rational(static_cast<long>(shape.multiplicity_factorials)) * roots_per_face_set,
                        monomial);
      }
    }
    result.ordinary.push_back(std::move(ordinary));
    result.fully_simple.push_back(std::move(simple));
  }
  return result;
}

}  // namespace fsmaps::detail
