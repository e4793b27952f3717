#include <doctest.h>

#include <random>

#include "fsmaps/error.hpp"
#include "fsmaps/series.hpp"

using namespace fsmaps;

namespace {

LaurentSeries h(int e, long c = 1) { return LaurentSeries::term(e, Rational(c)); }
LaurentSeries one() { return LaurentSeries::constant(1); }

LaurentSeries random_series(std::mt19937& rng, int lo, int hi) {
  LaurentSeries s(lo, hi);
  std::uniform_int_distribution<int> coeff(-3, 3), var(1, 3);
  for (int e = lo; e <= hi; ++e) {
    if (int c = coeff(rng)) s.add_term(e, Rational(c), Monomial::t_power(var(rng)));
    if (int c = coeff(rng)) s.add_term(e, Rational(c));
  }
  return s;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  Rational q = make_rational(6, 4);
  CHECK(to_string(q) == "3/2");
  CHECK(to_string(make_rational(-4, 2)) == "-2");
  CHECK(q.get_den() > 0);
}

TEST_CASE("monomials") {
  Monomial m = Monomial::t_power(2) * Monomial::t_power(1, 2) * Monomial::u_power(3);
  CHECK(m.to_string() == "t1^2*t2*u3");
  CHECK(m.t_degree() == 4);
  CHECK(Monomial{}.is_one());
  CHECK(Monomial{}.to_string().empty());
}

TEST_CASE("addition") {
  const LaurentSeries a = h(-1) + h(2, 3);
  CHECK(a + LaurentSeries() == a);
  CHECK((h(-1) + h(-1)).to_string() == "2*h^-1");
  CHECK((one() + h(1)) + (one() - h(1)) == LaurentSeries::constant(2));
  CHECK(add(a, a) == a + a);
}

TEST_CASE("multiplication") {
  CHECK(((one() + h(1)) * (one() + h(1, 2))).to_string() == "1 + 3*h + 2*h^2");
  const LaurentSeries a = h(-2, 5) + h(3, -1);
  CHECK(a * one() == a);
  CHECK(h(1) * h(-1) == one());
  CHECK(mul(a, a) == a * a);
}

TEST_CASE("truncated products keep only exact coefficients") {
  const LaurentSeries a = (one() + h(1)).truncated(1);
  const LaurentSeries b = (one() + h(1, 2)).truncated(1);
  const LaurentSeries p = a * b;
  CHECK(p.hi() == 1);
  CHECK(p.to_string() == "1 + 3*h");
  // Against extensions of the inputs: every retained coefficient survives.
  const LaurentSeries ext = (one() + h(1) + h(2, 7)) * (one() + h(1, 2) + h(2, -5));
  for (int e = p.lo(); e <= p.hi(); ++e) CHECK(p.coefficient(e) == ext.coefficient(e));

  // Negative exponents: window [-2, 0] times [0, 3] is exact only through h^0.
  LaurentSeries c(-2, 0), d(0, 3);
  c.add_term(-2, 1);
  c.add_term(0, 2);
  d.add_term(0, 1);
  d.add_term(3, 4);
  const LaurentSeries cd = c * d;
  CHECK(cd.lo() == -2);
  CHECK(cd.hi() == 0);
  CHECK(cd.coefficient(-2) == 1);
  CHECK(cd.coefficient(0) == 2);
}

TEST_CASE("window rules") {
  CHECK_THROWS_AS(LaurentSeries(2, 1), InvalidInput);
  LaurentSeries s(0, 2);
  CHECK_THROWS_AS(s.add_term(3, 1), InvalidInput);
  CHECK_THROWS_AS(s.add_term(-1, 1), InvalidInput);
  const LaurentSeries sum = h(0).truncated(3) + h(5);
  CHECK(sum.hi() == 3);
  CHECK(sum.coefficient(5) == 0);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_series(rng, -2, 3), b = random_series(rng, -1, 2), c = random_series(rng, 0, 4);
    CHECK((a * b).coefficients() == (b * a).coefficients());
    CHECK(((a * b) * c).coefficients() == (a * (b * c)).coefficients());
    const auto left = a * (b + c), right = a * b + a * c;
    const int top = std::min(left.hi(), right.hi());
    CHECK(left.truncated(top).coefficients() == right.truncated(top).coefficients());
    CHECK(((a + b) + c).coefficients() == (a + (b + c)).coefficients());
  }
}

TEST_CASE("negating h") {
  CHECK(substitute_negate_h(one() + h(1)) == one() - h(1));
  CHECK(substitute_negate_h(h(2)) == h(2));
  CHECK(substitute_negate_h(h(-1)) == h(-1, -1));
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_series(rng, -3, 3);
    CHECK(substitute_negate_h(substitute_negate_h(a)) == a);
  }
}

TEST_CASE("geometric inverse") {
  CHECK(LaurentSeries::geometric_inverse(0, 5).coefficients() == one().coefficients());
  CHECK(LaurentSeries::geometric_inverse(1, 3).to_string() == "1 + h + h^2 + h^3");
  CHECK(LaurentSeries::geometric_inverse(-2, 2).to_string() == "1 - 2*h + 4*h^2");
  CHECK(LaurentSeries::geometric_inverse(1, 3).hi() == 3);
  // (1 - 3h) · Σ 3^k h^k = 1 through the window.
  const LaurentSeries prod = (one() - h(1, 3)) * LaurentSeries::geometric_inverse(3, 6);
  CHECK(prod.coefficients() == one().coefficients());
}

TEST_CASE("evaluating u variables") {
  LaurentSeries s;
  s.add_term(1, 2, Monomial::u_power(2, 3) * Monomial::t_power(1));
  s.add_term(1, 1, Monomial::t_power(1));
  CHECK(s.evaluate_u(2, 1).to_string() == "3*h*t1");
  CHECK(s.evaluate_u(2, 2).to_string() == "17*h*t1");
}

TEST_CASE("canonical text rendering") {
  CHECK(LaurentSeries().to_string() == "0");
  CHECK(h(-1).to_string() == "h^-1");
  CHECK((LaurentSeries::term(1, make_rational(1, 2))).to_string() == "h/2");
  CHECK((LaurentSeries::constant(make_rational(1, 2)) + LaurentSeries::term(2, make_rational(1, 2))).to_string() ==
        "1/2 + h^2/2");
  LaurentSeries s = LaurentSeries::term(0, make_rational(-1, 4), Monomial::t_power(1, 2)) +
                    LaurentSeries::term(1, 3, Monomial::t_power(2));
  CHECK(s.to_string() == "-t1^2/4 + 3*h*t2");
}
