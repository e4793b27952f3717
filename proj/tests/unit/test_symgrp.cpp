#include <doctest.h>

#include <set>

#include "fsmaps/error.hpp"
#include "fsmaps/symgrp.hpp"
#include "support.hpp"

using namespace fsmaps;
using fsmaps::test::P;

TEST_CASE("compose is right to left") {
  const Permutation p = P(3, {{1, 2}}) * P(3, {{2, 3}});
  CHECK(p == P(3, {{1, 2, 3}}));
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  const Permutation q = P(5, {{1, 4, 2}, {3, 5}});
  CHECK(Permutation(5) * q == q);
  CHECK((q * q.inverse()).is_identity());
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), InvalidInput);
}

TEST_CASE("composition is associative on S4") {
  std::vector<Permutation> all;
  test::for_each_permutation(4, [&](const Permutation& p) { all.push_back(p); });
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 0; j < all.size(); j += 3)
      for (std::size_t k = 0; k < all.size(); k += 7)
        CHECK((all[i] * all[j]) * all[k] == all[i] * (all[j] * all[k]));
}

TEST_CASE("permutation construction and rendering") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), InvalidInput);
  CHECK(P(4, {{1, 3}}).to_string() == "(1 3)");
  CHECK(Permutation(3).to_string() == "()");
  CHECK(Permutation::from_one_based(std::vector<int>{2, 3, 1}) == P(3, {{1, 2, 3}}));
  CHECK(P(4, {{2, 4}}).one_based() == std::vector<int>{1, 4, 3, 2});
  CHECK(Permutation::transposition(3, 0, 2) == P(3, {{1, 3}}));
  CHECK(P(4, {{1, 2}, {3, 4}}).is_fixed_point_free_involution());
  CHECK_FALSE(P(4, {{1, 2}}).is_fixed_point_free_involution());
}

TEST_CASE("cycle type") {
  CHECK(P(4, {{1, 2, 3}}).cycle_type() == Partition{3, 1});
  CHECK(Permutation(3).cycle_type() == Partition{1, 1, 1});
  CHECK(P(4, {{1, 2}, {3, 4}}).cycle_type() == Partition{2, 2});
  CHECK(P(6, {{1, 5}, {2, 6, 3}}).cycle_count() == 3);
}

TEST_CASE("partition parsing and normalization") {
  CHECK(Partition::parse("1,2,1") == Partition{2, 1, 1});
  CHECK(Partition::parse("3").to_string() == "(3)");
  CHECK(Partition{2, 1, 1}.to_csv() == "2,1,1");
  CHECK_THROWS_AS(Partition::parse("2,,1"), InvalidInput);
  CHECK_THROWS_AS(Partition::parse("2,x"), InvalidInput);
  CHECK_THROWS_AS(Partition::parse("0"), InvalidInput);
  CHECK(Partition{3, 1, 1}.multiplicity(1) == 2);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(3).front() == Partition{3});
  CHECK(partitions_of(3).back() == Partition{1, 1, 1});
}

TEST_CASE("z factor and class size") {
  CHECK(z_factor({2}) == 2);
  CHECK(z_factor({1, 1}) == 2);
  CHECK(z_factor({2, 2}) == 8);
  CHECK_THROWS_AS(z_factor(Partition{}), InvalidInput);
  CHECK(class_size({2}) == 1);
  CHECK(class_size({3}) == 2);
  CHECK(class_size({1, 1, 1}) == 1);
  for (int d = 1; d <= 7; ++d)
    for (const auto& l : partitions_of(d)) CHECK(class_size(l) * z_factor(l) == factorial(d));
}

TEST_CASE("contents") {
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(Partition{2}.contents()) == std::vector<int>{0, 1});
  CHECK(sorted(Partition{1, 1}.contents()) == std::vector<int>{-1, 0});
  CHECK(sorted(Partition{2, 1}.contents()) == std::vector<int>{-1, 0, 1});
}

TEST_CASE("character values") {
  for (const auto& l : partitions_of(5)) CHECK(character({5}, l) == 1);
  CHECK(character({1, 1, 1}, {2, 1}) == -1);
  CHECK(character({2, 1}, {3}) == -1);
  CHECK_THROWS_AS(character({2}, {1, 1, 1}), InvalidInput);
}

TEST_CASE("characters agree with the Frobenius formula for d <= 6") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& rho : partitions_of(d))
      for (const auto& lambda : partitions_of(d)) {
        CAPTURE(rho.to_string());
        CAPTURE(lambda.to_string());
        CHECK(character(rho, lambda) == test::frobenius_character(rho, lambda));
      }
}

TEST_CASE("character orthogonality for d <= 6") {
  for (int d = 1; d <= 6; ++d) {
    const auto parts = partitions_of(d);
    long dim_squares = 0;
    for (const auto& rho : parts) {
      const long dim = character(rho, Partition::ones(d));
      CHECK(dim > 0);
      dim_squares += dim * dim;
    }
    CHECK(dim_squares == static_cast<long>(factorial(d)));
    for (const auto& a : parts)
      for (const auto& b : parts) {
        long s = 0;
        for (const auto& rho : parts) s += character(rho, a) * character(rho, b);
        CHECK(s == (a == b ? static_cast<long>(z_factor(a)) : 0));
      }
  }
}

TEST_CASE("class enumeration") {
  CHECK(enumerate_class({1, 1}) == std::vector<Permutation>{Permutation(2)});
  CHECK(enumerate_class({2}) == std::vector<Permutation>{P(2, {{1, 2}})});
  CHECK(enumerate_class({3}).size() == 2);
  for (int d = 1; d <= 6; ++d) {
    std::size_t total = 0;
    for (const auto& l : partitions_of(d)) {
      const auto members = enumerate_class(l);
      CHECK(members.size() == class_size(l));
      CHECK(std::is_sorted(members.begin(), members.end()));
      for (const auto& p : members) CHECK(p.cycle_type() == l);
      total += members.size();
    }
    CHECK(total == factorial(d));
  }
}

TEST_CASE("fixed-point-free involutions") {
  CHECK(enumerate_fpf_involutions(2) == std::vector<Permutation>{P(2, {{1, 2}})});
  CHECK(enumerate_fpf_involutions(4).size() == 3);
  CHECK(enumerate_fpf_involutions(6).size() == 15);
  CHECK(enumerate_fpf_involutions(8).size() == 105);
  for (const auto& p : enumerate_fpf_involutions(6)) CHECK(p.is_fixed_point_free_involution());
  CHECK_THROWS_AS(enumerate_fpf_involutions(3), InvalidInput);
}

TEST_CASE("central multiplication") {
  auto c = CentralElement::class_sum;
  CHECK(central_multiply(c({1, 1}), c({2})) == c({2}));
  CHECK(central_multiply(c({2}), c({2})) == c({1, 1}));
  CentralElement expected = c({1, 1, 1});
  expected *= 3;
  CentralElement three = c({3});
  three *= 3;
  expected += three;
  CHECK(central_multiply(c({2, 1}), c({2, 1})) == expected);
  CHECK_THROWS_AS(central_multiply(c({2}), c({3})), InvalidInput);
}

TEST_CASE("Jucys-Murphy products are central and match elementary symmetric contents") {
  // Coefficient of h^k in Π(1 + hJ_m) acts on the irreducible ρ by e_k(contents of ρ).
  for (int d = 2; d <= 5; ++d) {
    const auto expansion = jucys_murphy_expansion(d, d - 1, false);
    REQUIRE(expansion.size() == static_cast<std::size_t>(d));
    for (const auto& rho : partitions_of(d)) {
      const auto contents = rho.contents();
      std::vector<long> e(contents.size() + 1, 0);
      e[0] = 1;
      for (int c : contents)
        for (std::size_t k = contents.size(); k >= 1; --k) e[k] += c * e[k - 1];
      for (int k = 0; k < d; ++k) {
        // central character: Σ_λ coeff_λ |C_λ| χ_ρ(λ) / dim ρ
        Rational value = 0;
        for (const auto& [lambda, coeff] : expansion[k].coeffs)
          value += coeff * Rational(static_cast<long>(class_size(lambda))) * Rational(character(rho, lambda));
        value /= Rational(character(rho, Partition::ones(d)));
        CHECK(value == Rational(e[k]));
      }
    }
  }
}
