#include <doctest.h>

#include "fsmaps/error.hpp"
#include "fsmaps/hurwitz.hpp"
#include "fsmaps/symgrp.hpp"
#include "support.hpp"

using namespace fsmaps;

namespace {

Rational q(long n, unsigned long d = 1) { return make_rational(n, d); }

// Every tuple (ρ, τ1..τk) by plain nested loops, no pruning.
Rational naive_count(const Partition& lambda, const Partition& mu, int k, bool weak) {
  const int d = lambda.size();
  std::vector<std::pair<int, int>> transpositions;
  for (int b = 1; b < d; ++b)
    for (int a = 0; a < b; ++a) transpositions.push_back({a, b});
  if (k > 0 && transpositions.empty()) return Rational(0);
  long count = 0;
  for (const auto& rho : enumerate_class(lambda)) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      bool monotone = true;
      for (int i = 0; i + 1 < k; ++i) {
        const int b0 = transpositions[idx[i]].second, b1 = transpositions[idx[i + 1]].second;
        if (weak ? b0 > b1 : b0 >= b1) monotone = false;
      }
      if (monotone) {
        Permutation p = rho;
        for (int i = 0; i < k; ++i)
          p = p * Permutation::transposition(d, transpositions[idx[i]].first, transpositions[idx[i]].second);
        if (p.inverse().cycle_type() == mu) ++count;
      }
      int pos = 0;
      while (pos < k && ++idx[pos] == transpositions.size()) idx[pos++] = 0;
      if (pos == k) break;
    }
  }
  return Rational(count) / Rational(static_cast<unsigned long>(factorial(d)));
}

}  // namespace

TEST_CASE("strict brute-force values") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& l : partitions_of(d))
      for (const auto& m : partitions_of(d))
        CHECK(strict_brute(l, m, 0) == (l == m ? Rational(Rational(1) / Rational(static_cast<unsigned long>(z_factor(l)))) : Rational(0)));
  CHECK(strict_brute({2}, {1, 1}, 1) == q(1, 2));
  CHECK(strict_brute({3}, {1, 1, 1}, 2) == q(1, 3));
  CHECK_THROWS_AS(strict_brute({2}, {1, 1, 1}, 1), InvalidInput);
}

TEST_CASE("weak brute-force values") {
  CHECK(weak_brute({2, 1}, {2, 1}, 0) == q(1, 2));
  CHECK(weak_brute({2}, {1, 1}, 1) == q(1, 2));
  CHECK(weak_brute({2}, {2}, 2) == q(1, 2));
  CHECK_THROWS_AS(weak_brute({3}, {1, 1}, 1), InvalidInput);
}

TEST_CASE("brute-force counters agree with naive loops") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& l : partitions_of(d))
      for (const auto& m : partitions_of(d))
        for (int k = 0; k <= (d <= 3 ? 4 : 3); ++k) {
          CAPTURE(l.to_string());
          CAPTURE(m.to_string());
          CAPTURE(k);
          CHECK(strict_brute(l, m, k) == naive_count(l, m, k, false));
          CHECK(weak_brute(l, m, k) == naive_count(l, m, k, true));
        }
}

TEST_CASE("character formulas") {
  CHECK(strict_character({2}, {2}).series.to_string() == "1/2");
  CHECK(strict_character({2}, {1, 1}).series.to_string() == "h/2");
  CHECK(strict_character({3}, {1, 1, 1}).series.to_string() == "h^2/3");
  CHECK(weak_character({1}, {1}, 5).series.to_string() == "1");
  CHECK(weak_character({2}, {2}, 2).series.to_string() == "1/2 + h^2/2");
  CHECK(weak_character({2}, {2}, 2).series.hi() == 2);
  CHECK_THROWS_AS(strict_character({2}, {1}), InvalidInput);
  CHECK_THROWS_AS(weak_character({2}, {1}, 3), InvalidInput);
  const auto w = weak_character({2}, {1, 1}, 3).series;
  for (int k = 0; k <= 3; ++k) CHECK(w.coefficient(k) == weak_brute({2}, {1, 1}, k));
}

TEST_CASE("strict series are polynomials of degree below d with nonnegative coefficients") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& l : partitions_of(d))
      for (const auto& m : partitions_of(d)) {
        const auto s = strict_character(l, m).series;
        for (const auto& [e, poly] : s.coefficients()) {
          CHECK(e >= 0);
          CHECK(e <= d - 1);
          for (const auto& [mono, c] : poly) CHECK(c > 0);
        }
      }
}

TEST_CASE("strict oracle equivalence for d <= 5") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& l : partitions_of(d))
      for (int k = 0; k <= d - 1; ++k)
        for (const auto& [m, value] : brute_row(l, k, HurwitzKind::strict))
          CHECK(value == strict_character(l, m).series.coefficient(k));
}

TEST_CASE("weak oracle equivalence for d <= 4") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& l : partitions_of(d))
      for (int k = 0; k <= 4; ++k)
        for (const auto& [m, value] : brute_row(l, k, HurwitzKind::weak))
          CHECK(value == weak_character(l, m, 4).series.coefficient(k));
}

TEST_CASE("parity and symmetry") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& l : partitions_of(d))
      for (const auto& m : partitions_of(d)) {
        CHECK(strict_character(l, m).series == strict_character(m, l).series);
        for (int k = 0; k < d; ++k)
          if ((k + l.length() + m.length()) % 2 != 0) CHECK(strict_brute(l, m, k) == 0);
      }
}

TEST_CASE("class algebra expansion agrees with characters") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& l : partitions_of(d))
      for (const auto& m : partitions_of(d)) {
        CHECK(class_algebra_series(l, m, HurwitzKind::strict, d - 1).coefficients() ==
              strict_character(l, m).series.coefficients());
        CHECK(class_algebra_series(l, m, HurwitzKind::weak, 4).coefficients() ==
              weak_character(l, m, 4).series.coefficients());
      }
}

TEST_CASE("transition matrices are inverse") {
  CHECK(inverse_identity_check({1}, {1}, 10));
  CHECK(inverse_identity_check({2}, {2}, 6));
  for (int d = 1; d <= 5; ++d)
    for (const auto& l : partitions_of(d))
      for (const auto& m : partitions_of(d)) CHECK(inverse_identity_check(l, m, 10));
}
