#include "fsmaps/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "fsmaps/bijection.hpp"
#include "fsmaps/dessin.hpp"
#include "fsmaps/error.hpp"
#include "fsmaps/hurwitz.hpp"
#include "fsmaps/hypermap.hpp"
#include "fsmaps/parallel.hpp"
#include "fsmaps/simplifier.hpp"
#include "fsmaps/symgrp.hpp"
#include "canonical.hpp"

namespace fsmaps {

namespace {

constexpr std::pair<Identity, std::string_view> kNames[] = {
    {Identity::theorem_1_1, "theorem_1_1"},
    {Identity::corollary_1_5, "corollary_1_5"},
    {Identity::prop_2_7, "prop_2_7"},
    {Identity::lemma_2_5, "lemma_2_5"},
    {Identity::theorem_5_6, "theorem_5_6"},
    {Identity::bijection_roundtrip, "bijection_roundtrip"},
    {Identity::simplifier_suite, "simplifier_suite"},
    {Identity::hurwitz_strict, "hurwitz_strict"},
    {Identity::hurwitz_weak, "hurwitz_weak"},
};

using Clock = std::chrono::steady_clock;

class ReportBuilder {
 public:
  ReportBuilder(Identity identity, std::string instance, Json parameters) : start_(Clock::now()) {
    report_.identity = identity;
    report_.instance = std::move(instance);
    report_.parameters = std::move(parameters);
    report_.details = Json::object();
  }

  // Records the first failure only.
  void fail(Json witness) {
    if (!report_.counterexample) report_.counterexample = std::move(witness);
  }
  bool failed() const { return report_.counterexample.has_value(); }
  Json& details() { return report_.details; }

  VerificationReport finish() {
    report_.pass = !report_.counterexample;
    report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  Clock::time_point start_;
};

std::vector<Partition> partitions_up_to(int d_max) {
  std::vector<Partition> out;
  for (int d = 1; d <= d_max; ++d)
    for (auto& p : partitions_of(d)) out.push_back(std::move(p));
  return out;
}

std::string lambda_instance(const Partition& lambda) { return "lambda=" + lambda.to_string(); }

// First (exponent, monomial) where the two series differ.
std::optional<Json> first_difference(const LaurentSeries& a, const LaurentSeries& b, const char* left_name,
                                     const char* right_name) {
  std::map<int, std::map<Monomial, int>> keys;
  for (const auto& [e, p] : a.coefficients())
    for (const auto& [m, c] : p) keys[e][m] = 0;
  for (const auto& [e, p] : b.coefficients())
    for (const auto& [m, c] : p) keys[e][m] = 0;
  for (const auto& [e, ms] : keys) {
    for (const auto& [m, unused] : ms) {
      Rational ca = a.coefficient(e, m), cb = b.coefficient(e, m);
      if (ca != cb)
        return Json{{"h", e}, {"monomial", m.to_string()}, {left_name, to_string(ca)}, {right_name, to_string(cb)}};
    }
  }
  return std::nullopt;
}

std::size_t term_count(const LaurentSeries& s) {
  std::size_t n = 0;
  for (const auto& [e, p] : s.coefficients()) n += p.size();
  return n;
}

// Runs check(i) over n items in parallel and returns the first failing index's witness.
std::optional<Json> first_failure(std::size_t n, const std::function<std::optional<Json>(std::size_t)>& check) {
  std::vector<std::optional<Json>> results(n);
  parallel_for(n, [&](std::size_t i, unsigned) { results[i] = check(i); });
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

std::vector<std::vector<int>> internal_faces(const MapData& map) {
  BoundaryStructure boundary(map.sigma2, map.roots);
  std::vector<std::vector<int>> out;
  for (auto& c : map.sigma2.cycles())
    if (!boundary.contains(c.front())) out.push_back(std::move(c));
  return out;
}

std::vector<int> sorted_lengths(const std::vector<std::vector<int>>& cycles) {
  std::vector<int> out;
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- theorem 1.1

std::vector<VerificationReport> theorem_1_1(const VerifyParams& p) {
  const int m_max = p.bound;
  Json params{{"d_max", p.d_max}, {"edges", m_max}};
  std::vector<Partition> lambdas;
  for (auto& l : partitions_up_to(std::min(p.d_max, 2 * m_max))) lambdas.push_back(std::move(l));
  const auto batch = enumerate_weighted_batch(lambdas, m_max);

  std::vector<VerificationReport> out;
  for (const auto& lambda : lambdas) {
    ReportBuilder r(Identity::theorem_1_1, lambda_instance(lambda), params);
    const LaurentSeries& map = batch.at(lambda).ordinary;
    LaurentSeries transition;
    const Rational z(static_cast<unsigned long>(z_factor(lambda)));
    for (const auto& mu : partitions_of(lambda.size()))
      transition += strict_character(lambda, mu).series * batch.at(mu).fully_simple * z;
    if (auto diff = first_difference(map, transition, "map", "transition")) r.fail(*diff);
    r.details()["terms"] = term_count(map);
    r.details()["map"] = map.to_string();
    out.push_back(r.finish());
  }

  // Map((2)) = FSMap((2)) + h FSMap((1,1)).
  if (p.d_max >= 2) {
    ReportBuilder r(Identity::theorem_1_1, "closed_form lambda=(2)", params);
    const Partition two{2}, one_one{1, 1};
    LaurentSeries right = batch.at(two).fully_simple + LaurentSeries::term(1, 1) * batch.at(one_one).fully_simple;
    if (auto diff = first_difference(batch.at(two).ordinary, right, "map", "fsmap_sum")) r.fail(*diff);
    r.details()["terms"] = term_count(right);
    out.push_back(r.finish());
  }
  return out;
}

// -------------------------------------------------------------- corollary 1.5

std::vector<VerificationReport> corollary_1_5(const VerifyParams& p) {
  std::vector<VerificationReport> out;
  Json params{{"d_max", p.d_max}, {"order", p.order}};
  for (int d = 1; d <= p.d_max; ++d) {
    ReportBuilder r(Identity::corollary_1_5, "matrix d=" + std::to_string(d), params);
    int pairs = 0;
    for (const auto& lambda : partitions_of(d)) {
      for (const auto& mu : partitions_of(d)) {
        ++pairs;
        if (!inverse_identity_check(lambda, mu, p.order))
          r.fail(Json{{"lambda", lambda.to_string()}, {"mu", mu.to_string()}});
      }
    }
    r.details()["pairs"] = pairs;
    out.push_back(r.finish());
  }

  // FSMap(μ) = z(μ) Σ_λ H^≤(μ;λ)|_{h→-h} Map(λ), with the weak order chosen so
  // that every compared coefficient is exact.
  const int m_max = std::min(p.bound, 3);
  if (m_max >= 1) {
    Json sparams{{"d_max", std::min(p.d_max, 2 * m_max)}, {"edges", m_max}};
    std::vector<Partition> lambdas = partitions_up_to(std::min(p.d_max, 2 * m_max));
    const auto batch = enumerate_weighted_batch(lambdas, m_max);
    for (const auto& mu : lambdas) {
      ReportBuilder r(Identity::corollary_1_5, "series mu=" + mu.to_string(), sparams);
      const LaurentSeries& fs = batch.at(mu).fully_simple;
      int lowest = 0;
      for (const auto& lambda : partitions_of(mu.size())) lowest = std::min(lowest, batch.at(lambda).ordinary.lo());
      const int top = fs.is_zero() ? 0 : fs.coefficients().rbegin()->first;
      const int order = top - lowest + 1;
      LaurentSeries right;
      const Rational z(static_cast<unsigned long>(z_factor(mu)));
      for (const auto& lambda : partitions_of(mu.size()))
        right += substitute_negate_h(weak_character(mu, lambda, order).series) * batch.at(lambda).ordinary * z;
      const int h = right.hi();
      if (auto diff = first_difference(fs.truncated(h), right.truncated(h), "fsmap", "transition")) r.fail(*diff);
      r.details()["weak_order"] = order;
      r.details()["checked_through_h"] = h;
      out.push_back(r.finish());
    }
  }
  return out;
}

// ------------------------------------------------------------------ prop 2.7

std::vector<VerificationReport> prop_2_7(const VerifyParams& p) {
  std::vector<VerificationReport> out;
  Json params{{"d_max", p.d_max}};
  for (const auto& lambda : partitions_up_to(p.d_max)) {
    ReportBuilder r(Identity::prop_2_7, lambda_instance(lambda), params);
    const int d = lambda.size();
    const auto table = dessin_table(lambda);
    for (const auto& [key, value] : table)
      if (key.second < 0 || key.second > d - 1)
        r.fail(Json{{"mu", key.first.to_string()}, {"k", key.second}, {"dessins", to_string(value)}});
    const Rational z(static_cast<unsigned long>(z_factor(lambda)));
    int compared = 0;
    for (int k = 0; k <= d; ++k) {
      const auto row = brute_row(lambda, k, HurwitzKind::strict);
      for (const auto& [mu, h] : row) {
        auto it = table.find({mu, k});
        const Rational dessins = it == table.end() ? Rational(0) : it->second;
        ++compared;
        if (dessins != z * h)
          r.fail(Json{{"mu", mu.to_string()}, {"k", k}, {"dessins", to_string(dessins)}, {"z_hurwitz", to_string(z * h)}});
      }
    }
    r.details()["compared"] = compared;
    out.push_back(r.finish());
  }
  return out;
}

// ----------------------------------------------------------------- lemma 2.5

std::vector<VerificationReport> lemma_2_5(const VerifyParams& p) {
  std::vector<VerificationReport> out;
  Json params{{"d_max", p.d_max}};
  for (int d = 1; d <= p.d_max; ++d) {
    ReportBuilder r(Identity::lemma_2_5, "d=" + std::to_string(d), params);
    const auto sequences = all_monotone_sequences(d);
    r.details()["sequences"] = sequences.size();
    if (sequences.size() != factorial(d))
      r.fail(Json{{"sequences", sequences.size()}, {"factorial", factorial(d)}});

    std::map<Permutation, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < sequences.size(); ++i)
      buckets[product_of(sequences[i], static_cast<std::size_t>(d))].push_back(i);
    r.details()["products"] = buckets.size();
    if (buckets.size() != factorial(d)) r.fail(Json{{"distinct_products", buckets.size()}});
    for (const auto& [perm, ids] : buckets) {
      if (ids.size() != 1) {
        r.fail(Json{{"permutation", perm.to_string()}, {"factorizations", ids.size()}});
        continue;
      }
      const auto seq = monotone_factorization(perm);
      const int expected_length = d - perm.cycle_type().length();
      if (seq != sequences[ids.front()] || static_cast<int>(seq.size()) != expected_length ||
          product_of(seq, static_cast<std::size_t>(d)) != perm)
        r.fail(Json{{"permutation", perm.to_string()}, {"length", seq.size()}});
    }
    out.push_back(r.finish());
  }
  return out;
}

// --------------------------------------------------------------- theorem 5.6

std::vector<VerificationReport> theorem_5_6(const VerifyParams& p) {
  std::vector<VerificationReport> out;
  const int e_max = p.bound;
  Json params{{"d_max", p.d_max}, {"e_max", e_max}};
  for (const auto& lambda : partitions_up_to(std::min(p.d_max, e_max))) {
    ReportBuilder r(Identity::theorem_5_6, lambda_instance(lambda), params);
    const LaurentSeries left = enumerate_hypermaps(lambda, e_max, false);
    LaurentSeries right;
    const Rational z(static_cast<unsigned long>(z_factor(lambda)));
    for (const auto& mu : partitions_of(lambda.size()))
      right += strict_character(lambda, mu).series * enumerate_hypermaps(mu, e_max, true) * z;
    if (auto diff = first_difference(left, right, "hypermap", "transition")) r.fail(*diff);
    r.details()["terms"] = term_count(left);
    out.push_back(r.finish());
  }

  // σ1 involutive and u2 ↦ 1 against the map enumeration and the map census.
  const int m_max = std::min(3, std::max(1, e_max));
  Json sparams{{"edges", m_max}};
  for (const auto& lambda : partitions_up_to(std::min(p.d_max, 2 * m_max))) {
    ReportBuilder r(Identity::theorem_5_6, "map_specialization " + lambda_instance(lambda), sparams);
    for (bool fs : {false, true}) {
      LaurentSeries h = enumerate_hypermaps(lambda, 2 * m_max, fs, true).evaluate_u(2, 1);
      LaurentSeries m = enumerate_weighted(lambda, m_max, fs);
      if (auto diff = first_difference(h, m, "hypermap", "map")) {
        (*diff)["fully_simple"] = fs;
        r.fail(*diff);
      }
    }
    out.push_back(r.finish());
  }
  for (int m = 1; m <= m_max; ++m) {
    ReportBuilder r(Identity::theorem_5_6, "map_census m=" + std::to_string(m), sparams);
    const auto census = map_census(m);
    auto failure = first_failure(census.size(), [&](std::size_t i) -> std::optional<Json> {
      const MapData& map = census[i];
      MapWeight hw = hypermap_weight(map), mw = euler_and_weight(map);
      Monomial expected = mw.monomial;
      expected.u[2] = m;
      if (hw.h_exponent != mw.h_exponent || !(hw.monomial == expected) || hw.aut_divisor != mw.aut_divisor ||
          hypermap_euler_characteristic(map) != euler_characteristic(map))
        return to_json(map);
      return std::nullopt;
    });
    if (failure) r.fail(*failure);
    r.details()["maps"] = census.size();
    out.push_back(r.finish());
  }
  return out;
}

// --------------------------------------------------------------- simplifier

std::optional<Json> simplifier_witness(const MapData& map, bool hypermap) {
  auto witness = [&](const char* what) {
    Json j = to_json(map, hypermap);
    j["failed"] = what;
    return std::optional<Json>(j);
  };
  const SimplificationResult s = simplify(map);
  if (!is_fully_simple(s.simple_map)) return witness("fully simple");
  if (!check_monotone(s)) return witness("monotone");
  if (!(apply_transpositions(map, s.transpositions) == s.simple_map)) return witness("reconstruction");
  if (!(undo_transpositions(s.simple_map, s.transpositions, map.roots) == map)) return witness("inverse");
  if (euler_characteristic(s.simple_map) != euler_characteristic(map) + s.k()) return witness("euler characteristic");
  if (sorted_lengths(internal_faces(map)) != sorted_lengths(internal_faces(s.simple_map)))
    return witness("internal faces");

  const MapWeight before = hypermap ? MapWeight{} : euler_and_weight(map);
  if (!hypermap) {
    const MapWeight after = euler_and_weight(s.simple_map);
    if (before.h_exponent != after.h_exponent + s.k() || !(before.monomial == after.monomial))
      return witness("weight transport");
  }

  // Boundary degrees of M^s are the cycle type of σ2τ1⋯τk on B.
  const BoundaryStructure& b = s.boundary;
  std::vector<int> degrees = BoundaryStructure(s.simple_map.sigma2, s.simple_map.roots).degrees();
  if (Partition(degrees) != boundary_restriction(s.simple_map.sigma2, b.order()).cycle_type())
    return witness("boundary degrees");

  // Opposite convention: larger elements strictly increase, product is ∂(σ0)⁻¹ read backwards.
  const auto reversed = reversed_convention(s);
  for (std::size_t i = 0; i + 1 < reversed.size(); ++i)
    if (reversed[i].second >= reversed[i + 1].second) return witness("reversed convention monotone");
  const int top = static_cast<int>(b.size()) - 1;
  const Permutation tau_v = boundary_restriction(map.sigma0, b.order());
  std::vector<int> flipped(b.size());
  const Permutation tau_v_inverse = tau_v.inverse();
  for (int r = 0; r <= top; ++r) flipped[top - r] = top - tau_v_inverse(r);
  if (monotone_factorization(Permutation::from_images(flipped)) != reversed)
    return witness("factorization of tau_v");

  const SplitResult split = forward(map);
  if (!(split.fully_simple == s.simple_map)) return witness("forward agreement");
  if (split.dessin.k() != s.k()) return witness("dessin exponent");
  return std::nullopt;
}

std::vector<VerificationReport> simplifier_suite(const VerifyParams& p) {
  std::vector<VerificationReport> out;
  Json params{{"edges", p.bound}};
  for (int m = 1; m <= p.bound; ++m) {
    ReportBuilder r(Identity::simplifier_suite, "map_census m=" + std::to_string(m), params);
    const auto census = map_census(m);
    auto failure = first_failure(census.size(), [&](std::size_t i) { return simplifier_witness(census[i], false); });
    if (failure) r.fail(*failure);
    std::size_t transpositions = 0;
    for (const auto& map : census) transpositions += static_cast<std::size_t>(simplify(map).k());
    r.details()["maps"] = census.size();
    r.details()["transpositions"] = transpositions;
    out.push_back(r.finish());
  }
  for (int e = 1; e <= std::min(p.bound, 4); ++e) {
    ReportBuilder r(Identity::simplifier_suite, "hypermap_census e=" + std::to_string(e), params);
    const auto census = hypermap_census(e);
    auto failure = first_failure(census.size(), [&](std::size_t i) { return simplifier_witness(census[i], true); });
    if (failure) r.fail(*failure);
    r.details()["hypermaps"] = census.size();
    out.push_back(r.finish());
  }
  return out;
}

// ---------------------------------------------------------------- bijection

std::optional<Json> bijection_witness(const MapData& map, bool hypermap, bool& literal_mismatch) {
  auto witness = [&](const char* what) {
    Json j = to_json(map, hypermap);
    j["failed"] = what;
    return std::optional<Json>(j);
  };
  const SplitResult split = forward(map);
  try {
    if (hypermap)
      validate_hypermap(split.fully_simple);
    else
      validate(split.fully_simple);
    validate_dessin(split.dessin);
  } catch (const InvalidInput&) {
    return witness("outputs validate");
  }
  if (!is_fully_simple(split.fully_simple)) return witness("fully simple");
  if (!(reverse(split.fully_simple, split.dessin) == map)) return witness("reverse(forward(M)) = M");
  if (!weight_bookkeeping_check(map)) return witness("weight bookkeeping");

  const BoundaryStructure mb(map.sigma2, map.roots);
  if (BoundaryStructure(split.dessin.tau_b, split.dessin.roots).degrees() != mb.degrees())
    return witness("blue degrees");
  const BoundaryStructure fb(split.fully_simple.sigma2, split.fully_simple.roots);
  if (Partition(fb.degrees()) != split.dessin.tau_r.cycle_type()) return witness("red degrees");
  auto inner_m = internal_faces(map), inner_f = internal_faces(split.fully_simple);
  std::sort(inner_m.begin(), inner_m.end());
  std::sort(inner_f.begin(), inner_f.end());
  if (inner_m != inner_f) return witness("internal faces");

  const auto literal = order_preserving_embedding(split.fully_simple, split.dessin);
  literal_mismatch = !(reverse_with_embedding(split.fully_simple, split.dessin, literal) == map);
  return std::nullopt;
}

// Same permutations and the same set of rooted faces.
bool same_up_to_root_choice(const MapData& a, const MapData& b) {
  if (!(a.sigma0 == b.sigma0) || !(a.sigma1 == b.sigma1) || !(a.sigma2 == b.sigma2)) return false;
  if (a.roots.size() != b.roots.size()) return false;
  BoundaryStructure ba(a.sigma2, a.roots);
  for (int r : b.roots)
    if (!ba.contains(r)) return false;
  return true;
}

// forward() labels the dessin by boundary rank; census dessins carry canonical labels.
bool same_dessin_class(const DessinData& a, const DessinData& b) {
  return detail::canonical_key(a.tau_b, a.tau_v, a.roots) == detail::canonical_key(b.tau_b, b.tau_v, b.roots);
}

std::vector<VerificationReport> bijection_roundtrip(const VerifyParams& p) {
  std::vector<VerificationReport> out;
  Json params{{"edges", p.bound}, {"trials", p.trials}, {"seed", p.seed}};

  for (int m = 1; m <= p.bound; ++m) {
    ReportBuilder r(Identity::bijection_roundtrip, "map_census m=" + std::to_string(m), params);
    const auto census = map_census(m);
    std::vector<char> mismatch(census.size(), 0);
    auto failure = first_failure(census.size(), [&](std::size_t i) {
      bool literal = false;
      auto w = bijection_witness(census[i], false, literal);
      mismatch[i] = literal;
      return w;
    });
    if (failure) r.fail(*failure);
    std::size_t literal_failures = 0;
    std::optional<std::size_t> first_literal;
    for (std::size_t i = 0; i < census.size(); ++i) {
      if (!mismatch[i]) continue;
      ++literal_failures;
      if (!first_literal) first_literal = i;
    }
    r.details()["maps"] = census.size();
    r.details()["literal_order_preserving_mismatches"] = literal_failures;
    if (first_literal) r.details()["literal_order_preserving_example"] = to_json(census[*first_literal]);
    out.push_back(r.finish());
  }

  for (int e = 1; e <= std::min(p.bound, 4); ++e) {
    ReportBuilder r(Identity::bijection_roundtrip, "hypermap_census e=" + std::to_string(e), params);
    const auto census = hypermap_census(e);
    auto failure = first_failure(census.size(), [&](std::size_t i) {
      bool literal = false;
      return bijection_witness(census[i], true, literal);
    });
    if (failure) r.fail(*failure);
    r.details()["hypermaps"] = census.size();
    out.push_back(r.finish());
  }

  std::mt19937_64 rng(p.seed);
  auto random_perm = [&](int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(std::move(images));
  };
  auto random_subset = [&](int n) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (rng() & 1) subset.push_back(i);
    std::shuffle(subset.begin(), subset.end(), rng);
    return subset;
  };
  {
    ReportBuilder r(Identity::bijection_roundtrip, "lemma distinct_cycles S8", params);
    for (int t = 0; t < p.trials && !r.failed(); ++t) {
      Permutation sigma = random_perm(8);
      auto subset = random_subset(8);
      if (!boundary_restriction_lemma_check(sigma, subset))
        r.fail(Json{{"sigma", sigma.to_string()}, {"subset", subset}});
    }
    out.push_back(r.finish());
  }
  {
    ReportBuilder r(Identity::bijection_roundtrip, "lemma restriction_homomorphism S8", params);
    for (int t = 0; t < p.trials && !r.failed(); ++t) {
      Permutation a = random_perm(8);
      auto subset = random_subset(8);
      Permutation b = random_perm(static_cast<int>(subset.size()));
      if (!restriction_homomorphism_check(a, b, subset))
        r.fail(Json{{"a", a.to_string()}, {"b", b.to_string()}, {"subset", subset}});
    }
    out.push_back(r.finish());
  }

  // forward(reverse(F, D)) = (F, D) over fully simple census maps and dessins.
  const int pair_edges = std::min(p.bound, 3);
  if (pair_edges >= 1) {
    ReportBuilder r(Identity::bijection_roundtrip, "pairs m<=" + std::to_string(pair_edges), params);
    std::map<int, std::vector<DessinClass>> dessins;
    std::size_t pairs = 0;
    for (int m = 1; m <= pair_edges && !r.failed(); ++m) {
      for (const auto& f : map_census(m)) {
        if (!is_fully_simple(f)) continue;
        const BoundaryStructure fb(f.sigma2, f.roots);
        const int n = static_cast<int>(fb.size());
        if (!dessins.count(n)) dessins[n] = dessin_census(n);
        const Partition red(fb.degrees());
        for (const auto& dc : dessins[n]) {
          if (dc.dessin.tau_r.cycle_type() != red) continue;
          ++pairs;
          const MapData m_fd = reverse(f, dc.dessin);
          const SplitResult back = forward(m_fd);
          if (!same_up_to_root_choice(back.fully_simple, f) || !same_dessin_class(back.dessin, dc.dessin)) {
            r.fail(Json{{"fully_simple", to_json(f)}, {"dessin", to_json(dc.dessin)}});
            break;
          }
        }
      }
    }
    r.details()["pairs"] = pairs;
    out.push_back(r.finish());
  }
  return out;
}

// ------------------------------------------------------------------ hurwitz

std::vector<VerificationReport> hurwitz_strict(const VerifyParams& p) {
  std::vector<VerificationReport> out;
  Json params{{"d_max", p.d_max}};
  for (const auto& lambda : partitions_up_to(p.d_max)) {
    ReportBuilder r(Identity::hurwitz_strict, lambda_instance(lambda), params);
    const int d = lambda.size();
    int compared = 0;
    for (int k = 0; k <= d - 1; ++k) {
      for (const auto& [mu, brute] : brute_row(lambda, k, HurwitzKind::strict)) {
        ++compared;
        const Rational formula = strict_character(lambda, mu).series.coefficient(k);
        if (brute != formula)
          r.fail(Json{{"mu", mu.to_string()}, {"k", k}, {"brute", to_string(brute)}, {"character", to_string(formula)}});
        const int parity = (2 * d - lambda.length() - mu.length()) % 2;
        if (sgn(brute) != 0 && k % 2 != parity) r.fail(Json{{"mu", mu.to_string()}, {"k", k}, {"failed", "parity"}});
      }
    }
    for (const auto& mu : partitions_of(d)) {
      const auto a = strict_character(lambda, mu).series, b = strict_character(mu, lambda).series;
      if (a.coefficients() != b.coefficients()) r.fail(Json{{"mu", mu.to_string()}, {"failed", "symmetry"}});
      if (d <= 4) {
        auto c = class_algebra_series(lambda, mu, HurwitzKind::strict, d - 1);
        if (auto diff = first_difference(a, c, "character", "class_algebra")) {
          (*diff)["mu"] = mu.to_string();
          r.fail(*diff);
        }
      }
    }
    r.details()["compared"] = compared;
    out.push_back(r.finish());
  }
  return out;
}

std::vector<VerificationReport> hurwitz_weak(const VerifyParams& p) {
  std::vector<VerificationReport> out;
  Json params{{"d_max", p.d_max}, {"order", p.order}};
  for (const auto& lambda : partitions_up_to(p.d_max)) {
    ReportBuilder r(Identity::hurwitz_weak, lambda_instance(lambda), params);
    const int d = lambda.size();
    int compared = 0;
    for (int k = 0; k <= p.order; ++k) {
      for (const auto& [mu, brute] : brute_row(lambda, k, HurwitzKind::weak)) {
        ++compared;
        const Rational formula = weak_character(lambda, mu, p.order).series.coefficient(k);
        if (brute != formula)
          r.fail(Json{{"mu", mu.to_string()}, {"k", k}, {"brute", to_string(brute)}, {"character", to_string(formula)}});
      }
    }
    if (d <= 4) {
      const int order = std::min(p.order, 4);
      for (const auto& mu : partitions_of(d)) {
        auto a = weak_character(lambda, mu, order).series;
        auto c = class_algebra_series(lambda, mu, HurwitzKind::weak, order);
        if (auto diff = first_difference(a, c, "character", "class_algebra")) {
          (*diff)["mu"] = mu.to_string();
          r.fail(*diff);
        }
      }
    }
    r.details()["compared"] = compared;
    out.push_back(r.finish());
  }
  return out;
}

}  // namespace

std::string_view identity_name(Identity identity) {
  for (const auto& [id, name] : kNames)
    if (id == identity) return name;
  return "unknown";
}

Identity parse_identity(std::string_view name) {
  for (const auto& [id, n] : kNames)
    if (n == name) return id;
  throw InvalidInput("unknown identity: " + std::string(name));
}

std::vector<Identity> all_identities() {
  std::vector<Identity> out;
  for (const auto& [id, name] : kNames) out.push_back(id);
  return out;
}

Json VerificationReport::to_json() const {
  Json j{{"identity", identity_name(identity)},
         {"instance", instance},
         {"parameters", parameters},
         {"status", pass ? "pass" : "fail"},
         {"details", details},
         {"elapsed", elapsed_seconds}};
  j["counterexample"] = counterexample ? *counterexample : Json(nullptr);
  return j;
}

std::vector<VerificationReport> run_suite(Identity identity, const VerifyParams& params) {
  if (params.d_max < 1 || params.d_max > 7) throw InvalidInput("d_max outside [1, 7]");
  if (params.bound < 1 || params.bound > 6) throw InvalidInput("edge bound outside [1, 6]");
  if (params.order < 0) throw InvalidInput("order must be non-negative");
  switch (identity) {
    case Identity::theorem_1_1: return theorem_1_1(params);
    case Identity::corollary_1_5: return corollary_1_5(params);
    case Identity::prop_2_7: return prop_2_7(params);
    case Identity::lemma_2_5: return lemma_2_5(params);
    case Identity::theorem_5_6: return theorem_5_6(params);
    case Identity::bijection_roundtrip: return bijection_roundtrip(params);
    case Identity::simplifier_suite: return simplifier_suite(params);
    case Identity::hurwitz_strict: return hurwitz_strict(params);
    case Identity::hurwitz_weak: return hurwitz_weak(params);
  }
  throw InvalidInput("unknown identity");
}

}  // namespace fsmaps
