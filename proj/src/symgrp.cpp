#include "fsmaps/symgrp.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "fsmaps/error.hpp"

namespace fsmaps {

namespace {

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[i] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

long character_rec(const Partition& rho, const Partition& lambda,
                   std::map<std::pair<Partition, Partition>, long>& memo) {
  if (lambda.empty()) return rho.empty() ? 1 : 0;
  auto key = std::make_pair(rho, lambda);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int len = rho.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = rho[i] + (len - 1 - i);

  const int r = lambda[0];
  Partition rest(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
  long value = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Each bead jumped over is one more row of the removed rim hook.
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<int> reduced = beta;
    reduced[i] = target;
    long sub = character_rec(from_beta_set(std::move(reduced)), rest, memo);
    value += (jumped % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), value);
  return value;
}

struct ClassTables {
  std::vector<Partition> classes;
  std::map<Partition, std::vector<Permutation>> members;
  // structure[(λ, μ)][ν] = #{(x, y) ∈ C_λ × C_μ : x y = z_ν} for a fixed z_ν ∈ C_ν.
  std::map<std::pair<Partition, Partition>, std::map<Partition, long>> structure;
};

const ClassTables& class_tables(int d) {
  static std::mutex mutex;
  static std::map<int, ClassTables> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  if (d < 1 || d > 7) throw InvalidInput("class algebra tables are limited to 1 <= d <= 7");

  ClassTables t;
  t.classes = partitions_of(d);
  for (const auto& lambda : t.classes) t.members[lambda] = enumerate_class(lambda);
  for (const auto& lambda : t.classes) {
    for (const auto& mu : t.classes) {
      auto& row = t.structure[{lambda, mu}];
      for (const auto& nu : t.classes) {
        const Permutation& z = t.members[nu].front();
        long count = 0;
        for (const auto& x : t.members[lambda])
          if ((x.inverse() * z).cycle_type() == mu) ++count;
        if (count) row[nu] = count;
      }
    }
  }
  return cache.emplace(d, std::move(t)).first->second;
}

using GroupAlgebraSeries = std::map<Permutation, std::vector<Rational>>;

// Right multiplication by Σ_k h^k x^k truncated at `order`, where x = factor.
GroupAlgebraSeries multiply_by(const GroupAlgebraSeries& lhs, const GroupAlgebraSeries& factor, int order) {
  GroupAlgebraSeries out;
  for (const auto& [g, gs] : lhs) {
    for (const auto& [f, fs] : factor) {
      auto& target = out[g * f];
      target.resize(static_cast<std::size_t>(order) + 1);
      for (int i = 0; i <= order; ++i) {
        if (sgn(gs[i]) == 0) continue;
        for (int j = 0; i + j <= order; ++j) target[i + j] += gs[i] * fs[j];
      }
    }
  }
  return out;
}

}  // namespace

long character(const Partition& rho, const Partition& lambda) {
  if (rho.size() != lambda.size()) throw InvalidInput("character: |ρ| != |λ|");
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, long> memo;
  std::lock_guard lock(mutex);
  return character_rec(rho, lambda, memo);
}

void for_each_in_class(const Partition& lambda, const std::function<void(const Permutation&)>& visit) {
  const int d = lambda.size();
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 0);
  do {
    Permutation p = Permutation::from_images(images);
    if (p.cycle_type() == lambda) visit(p);
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<Permutation> enumerate_class(const Partition& lambda) {
  std::vector<Permutation> out;
  for_each_in_class(lambda, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> enumerate_fpf_involutions(int n) {
  if (n <= 0 || n % 2 != 0) throw InvalidInput("fixed-point-free involutions need a positive even n");
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  std::function<void()> rec = [&]() {
    auto first = std::find(images.begin(), images.end(), -1);
    if (first == images.end()) {
      out.push_back(Permutation::from_images(images));
      return;
    }
    int a = static_cast<int>(first - images.begin());
    for (int b = a + 1; b < n; ++b) {
      if (images[b] != -1) continue;
      images[a] = b;
      images[b] = a;
      rec();
      images[a] = images[b] = -1;
    }
  };
  rec();
  return out;
}

CentralElement CentralElement::class_sum(const Partition& lambda) {
  CentralElement e;
  e.degree = lambda.size();
  e.coeffs[lambda] = 1;
  return e;
}

Rational CentralElement::operator[](const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? Rational(0) : it->second;
}

CentralElement& CentralElement::operator+=(const CentralElement& other) {
  if (degree != other.degree) throw InvalidInput("central elements of different degrees");
  for (const auto& [lambda, c] : other.coeffs) {
    auto& slot = coeffs[lambda];
    slot += c;
    if (sgn(slot) == 0) coeffs.erase(lambda);
  }
  return *this;
}

CentralElement& CentralElement::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) coeffs.clear();
  for (auto& [lambda, c] : coeffs) c *= scalar;
  return *this;
}

CentralElement central_multiply(const CentralElement& a, const CentralElement& b) {
  if (a.degree != b.degree) throw InvalidInput("central_multiply: size mismatch");
  CentralElement out;
  out.degree = a.degree;
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  const ClassTables& t = class_tables(a.degree);
  for (const auto& [lambda, ca] : a.coeffs) {
    for (const auto& [mu, cb] : b.coeffs) {
      for (const auto& [nu, count] : t.structure.at({lambda, mu})) {
        auto& slot = out.coeffs[nu];
        slot += ca * cb * count;
      }
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = sgn(it->second) == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

std::vector<CentralElement> jucys_murphy_expansion(int d, int order, bool weak) {
  if (d < 1 || order < 0) throw InvalidInput("jucys_murphy_expansion: need d >= 1 and order >= 0");
  const auto n = static_cast<std::size_t>(d);
  const auto width = static_cast<std::size_t>(order) + 1;

  GroupAlgebraSeries product;
  product[Permutation(n)] = std::vector<Rational>(width);
  product[Permutation(n)][0] = 1;

  for (int m = 2; m <= d; ++m) {
    // J_m as a group-algebra element with coefficient list in h.
    GroupAlgebraSeries jm;
    for (int l = 1; l < m; ++l) {
      auto& slot = jm[Permutation::transposition(n, l - 1, m - 1)];
      slot.assign(width, 0);
      slot[0] = 1;
    }
    GroupAlgebraSeries factor;
    factor[Permutation(n)] = std::vector<Rational>(width);
    factor[Permutation(n)][0] = 1;
    if (!weak) {
      for (const auto& [g, c] : jm) {
        auto& slot = factor[g];
        slot.resize(width);
        if (order >= 1) slot[1] += 1;
      }
    } else {
      // 1/(1 - h J_m) = Σ_k h^k J_m^k.
      GroupAlgebraSeries power = factor;
      for (int k = 1; k <= order; ++k) {
        power = multiply_by(power, jm, order);
        for (const auto& [g, c] : power) {
          auto& slot = factor[g];
          slot.resize(width);
          slot[static_cast<std::size_t>(k)] += c[0];
        }
      }
    }
    product = multiply_by(product, factor, order);
  }

  std::vector<CentralElement> out(width);
  for (std::size_t k = 0; k < width; ++k) {
    out[k].degree = d;
    std::map<Partition, Rational> seen;
    std::map<Partition, std::size_t> hits;
    for (const auto& [g, coeffs] : product) {
      const Rational& c = coeffs[k];
      if (sgn(c) == 0) continue;
      Partition type = g.cycle_type();
      auto [it, inserted] = seen.emplace(type, c);
      if (!inserted && it->second != c) throw std::logic_error("Jucys–Murphy expansion is not central");
      ++hits[type];
    }
    for (const auto& [type, c] : seen) {
      if (hits[type] != class_size(type)) throw std::logic_error("Jucys–Murphy expansion is not central");
      out[k].coeffs[type] = c;
    }
  }
  return out;
}

}  // namespace fsmaps
