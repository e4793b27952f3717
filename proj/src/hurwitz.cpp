#include "fsmaps/hurwitz.hpp"

#include <mutex>

#include "fsmaps/error.hpp"
#include "fsmaps/parallel.hpp"
#include "fsmaps/symgrp.hpp"

namespace fsmaps {

namespace {

void require_same_size(const Partition& lambda, const Partition& mu) {
  if (lambda.empty() || mu.empty()) throw InvalidInput("partitions must be non-empty");
  if (lambda.size() != mu.size()) throw InvalidInput("size mismatch: |λ| != |μ|");
}

Partition type_of(const std::vector<int>& images) {
  std::vector<int> parts;
  std::vector<char> seen(images.size(), 0);
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = static_cast<int>(x); !seen[y]; y = images[y]) {
      seen[y] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

// Extends P = ρ τ1⋯τi by transpositions (a b), a < b, b ≥ min_b (strict: b > last).
void extend(std::vector<int>& product, int depth, int k, int min_b, bool weak, std::map<Partition, long>& counts) {
  const int d = static_cast<int>(product.size());
  if (depth == k) {
    ++counts[type_of(product)];
    return;
  }
  for (int b = min_b; b < d; ++b) {
    for (int a = 0; a < b; ++a) {
      std::swap(product[a], product[b]);  // P ← P∘(a b)
      extend(product, depth + 1, k, weak ? b : b + 1, weak, counts);
      std::swap(product[a], product[b]);
    }
  }
}

}  // namespace

std::map<Partition, Rational> brute_row(const Partition& lambda, int k, HurwitzKind kind) {
  if (lambda.empty()) throw InvalidInput("partitions must be non-empty");
  std::map<Partition, Rational> row;
  for (const auto& mu : partitions_of(lambda.size())) row[mu] = 0;
  if (k < 0) return row;

  const std::vector<Permutation> members = enumerate_class(lambda);
  std::mutex mutex;
  std::map<Partition, long> total;
  parallel_for(members.size(), [&](std::size_t i, unsigned) {
    std::vector<int> product = members[i].images();
    std::map<Partition, long> counts;
    extend(product, 0, k, 1, kind == HurwitzKind::weak, counts);
    std::lock_guard lock(mutex);
    for (const auto& [mu, c] : counts) total[mu] += c;
  });
  const Rational d_factorial(static_cast<unsigned long>(factorial(lambda.size())));
  for (const auto& [mu, c] : total) row[mu] = Rational(c) / d_factorial;
  return row;
}

Rational strict_brute(const Partition& lambda, const Partition& mu, int k) {
  require_same_size(lambda, mu);
  return brute_row(lambda, k, HurwitzKind::strict).at(mu);
}

Rational weak_brute(const Partition& lambda, const Partition& mu, int k) {
  require_same_size(lambda, mu);
  return brute_row(lambda, k, HurwitzKind::weak).at(mu);
}

namespace {

HurwitzSeries character_series(const Partition& lambda, const Partition& mu, HurwitzKind kind, int order) {
  require_same_size(lambda, mu);
  if (kind == HurwitzKind::weak && order < 0) throw InvalidInput("order must be non-negative");
  HurwitzSeries out{kind, lambda, mu, LaurentSeries(0, kind == HurwitzKind::weak ? order : LaurentSeries::kExact)};
  const Rational scale = Rational(1) / (Rational(static_cast<unsigned long>(z_factor(lambda))) *
                                        Rational(static_cast<unsigned long>(z_factor(mu))));
  for (const auto& rho : partitions_of(lambda.size())) {
    const long chi = character(rho, lambda) * character(rho, mu);
    if (chi == 0) continue;
    LaurentSeries product = LaurentSeries::constant(Rational(chi) * scale);
    for (int c : rho.contents()) {
      if (kind == HurwitzKind::strict) {
        LaurentSeries factor = LaurentSeries::constant(1);
        if (c != 0) factor.add_term(1, Rational(c));
        product = product * factor;
      } else {
        product = product * LaurentSeries::geometric_inverse(c, order);
      }
    }
    out.series += product;
  }
  if (kind == HurwitzKind::weak) out.series = out.series.truncated(order);
  return out;
}

}  // namespace

HurwitzSeries strict_character(const Partition& lambda, const Partition& mu) {
  return character_series(lambda, mu, HurwitzKind::strict, 0);
}

HurwitzSeries weak_character(const Partition& lambda, const Partition& mu, int order) {
  return character_series(lambda, mu, HurwitzKind::weak, order);
}

LaurentSeries class_algebra_series(const Partition& lambda, const Partition& mu, HurwitzKind kind, int order) {
  require_same_size(lambda, mu);
  const int d = lambda.size();
  const auto jm = jucys_murphy_expansion(d, order, kind == HurwitzKind::weak);
  const CentralElement base = central_multiply(CentralElement::class_sum(lambda), CentralElement::class_sum(mu));
  const Rational d_factorial(static_cast<unsigned long>(factorial(d)));
  LaurentSeries out(0, order);
  for (int k = 0; k <= order; ++k) {
    Rational c = central_multiply(base, jm[static_cast<std::size_t>(k)]).identity_coefficient() / d_factorial;
    if (sgn(c) != 0) out.add_term(k, c);
  }
  return out;
}

bool inverse_identity_check(const Partition& lambda, const Partition& mu, int order) {
  require_same_size(lambda, mu);
  if (order < 0) throw InvalidInput("order must be non-negative");
  LaurentSeries sum(0, order);
  for (const auto& rho : partitions_of(lambda.size())) {
    LaurentSeries left = strict_character(lambda, rho).series;
    left *= Rational(static_cast<unsigned long>(z_factor(lambda)));
    LaurentSeries right = substitute_negate_h(weak_character(rho, mu, order).series);
    right *= Rational(static_cast<unsigned long>(z_factor(rho)));
    sum += left * right;
  }
  sum = sum.truncated(order);
  LaurentSeries expected(0, order);
  if (lambda == mu) expected.add_term(0, 1);
  return sum.coefficients() == expected.coefficients();
}

}  // namespace fsmaps
