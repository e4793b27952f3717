#pragma once

#include <gmpxx.h>

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fsmaps {

/// Exact rational with arbitrary-precision numerator and denominator,
/// always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational make_rational(long num, unsigned long den = 1);

/// Product of powers of the internal-face weights t_i and hyperedge weights u_i.
struct Monomial {
  std::map<int, int> t;  ///< index -> exponent, zero exponents are not stored
  std::map<int, int> u;

  static Monomial t_power(int index, int exponent = 1);
  static Monomial u_power(int index, int exponent = 1);

  bool is_one() const { return t.empty() && u.empty(); }
  /// Σ i·exponent over the t variables.
  int t_degree() const;
  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// "t1^2*t3*u2"; empty for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using Polynomial = std::map<Monomial, Rational>;

/// Truncated Laurent series in h with polynomial coefficients.
///
/// The window [lo, hi] bounds the stored h-exponents. Coefficients below `lo`
/// are zero; `hi` is the truncation order (coefficients above it are unknown),
/// and `kExact` marks a series that is exact in every order. Zero coefficients
/// are never stored.
class LaurentSeries {
 public:
  static constexpr int kExact = INT_MAX;

  LaurentSeries() = default;
  LaurentSeries(int lo, int hi);

  /// The constant c (exact).
  static LaurentSeries constant(const Rational& c);
  /// c · h^e · monomial (exact).
  static LaurentSeries term(int exponent, const Rational& c, const Monomial& m = {});
  /// Σ_{k=0}^{order} c^k h^k, truncated at h^order.
  static LaurentSeries geometric_inverse(int content, int order);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool is_exact() const { return hi_ == kExact; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c · h^e · m. Throws InvalidInput when e lies outside the window.
  void add_term(int exponent, const Rational& c, const Monomial& m = {});

  Rational coefficient(int exponent, const Monomial& m = {}) const;
  const Polynomial* coefficient_polynomial(int exponent) const;
  const std::map<int, Polynomial>& coefficients() const { return coeffs_; }

  /// Drops every term above `order` and lowers the window accordingly.
  LaurentSeries truncated(int order) const;
  /// h -> -h.
  LaurentSeries negate_h() const;
  /// Substitutes u_index -> value.
  LaurentSeries evaluate_u(int index, const Rational& value) const;

  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  LaurentSeries& operator*=(const Rational& scalar);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  /// Canonical rendering: terms by h-exponent, then monomial order; h as "h".
  /// Examples: "h^-1", "h/2", "1/2 + h^2/2", "3*h*t2 - t1^2/4", "0".
  std::string to_string() const;

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  void normalize();

  int lo_ = 0;
  int hi_ = kExact;
  std::map<int, Polynomial> coeffs_;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries substitute_negate_h(const LaurentSeries& a);

}  // namespace fsmaps
