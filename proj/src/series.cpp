#include "fsmaps/series.hpp"

#include <algorithm>
#include <sstream>

#include "fsmaps/error.hpp"

namespace fsmaps {

namespace {

int saturating_add(int a, int b) {
  if (a == LaurentSeries::kExact || b == LaurentSeries::kExact) return LaurentSeries::kExact;
  long s = static_cast<long>(a) + b;
  if (s >= LaurentSeries::kExact) return LaurentSeries::kExact;
  return static_cast<int>(std::max<long>(s, INT_MIN + 1));
}

void erase_zeros(Polynomial& p) {
  for (auto it = p.begin(); it != p.end();) it = (sgn(it->second) == 0) ? p.erase(it) : std::next(it);
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Monomial Monomial::t_power(int index, int exponent) {
  Monomial m;
  if (exponent != 0) m.t[index] = exponent;
  return m;
}

Monomial Monomial::u_power(int index, int exponent) {
  Monomial m;
  if (exponent != 0) m.u[index] = exponent;
  return m;
}

int Monomial::t_degree() const {
  int d = 0;
  for (auto [i, e] : t) d += i * e;
  return d;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (auto [i, e] : other.t) t[i] += e;
  for (auto [i, e] : other.u) u[i] += e;
  return *this;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char name, const std::map<int, int>& vars) {
    for (auto [i, e] : vars) {
      os << (first ? "" : "*") << name << i;
      if (e != 1) os << '^' << e;
      first = false;
    }
  };
  emit('t', t);
  emit('u', u);
  return os.str();
}

LaurentSeries::LaurentSeries(int lo, int hi) : lo_(lo), hi_(hi) {
  if (hi < lo) throw InvalidInput("empty series window");
}

LaurentSeries LaurentSeries::constant(const Rational& c) { return term(0, c); }

LaurentSeries LaurentSeries::term(int exponent, const Rational& c, const Monomial& m) {
  LaurentSeries s(exponent, kExact);
  s.add_term(exponent, c, m);
  return s;
}

LaurentSeries LaurentSeries::geometric_inverse(int content, int order) {
  if (order < 0) throw InvalidInput("negative series order");
  LaurentSeries s(0, order);
  Rational power = 1;
  for (int k = 0; k <= order; ++k) {
    s.add_term(k, power);
    power *= content;
  }
  return s;
}

void LaurentSeries::add_term(int exponent, const Rational& c, const Monomial& m) {
  if (exponent < lo_ || exponent > hi_) throw InvalidInput("exponent outside the series window");
  if (sgn(c) == 0) return;
  auto& poly = coeffs_[exponent];
  auto& slot = poly[m];
  slot += c;
  if (sgn(slot) == 0) {
    poly.erase(m);
    if (poly.empty()) coeffs_.erase(exponent);
  }
}

Rational LaurentSeries::coefficient(int exponent, const Monomial& m) const {
  if (const Polynomial* p = coefficient_polynomial(exponent)) {
    auto it = p->find(m);
    if (it != p->end()) return it->second;
  }
  return 0;
}

const Polynomial* LaurentSeries::coefficient_polynomial(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? nullptr : &it->second;
}

LaurentSeries LaurentSeries::truncated(int order) const {
  LaurentSeries out(std::min(lo_, order), std::min(hi_, order));
  for (const auto& [e, poly] : coeffs_)
    if (e <= order) out.coeffs_[e] = poly;
  return out;
}

LaurentSeries LaurentSeries::negate_h() const {
  LaurentSeries out = *this;
  for (auto& [e, poly] : out.coeffs_)
    if (e % 2 != 0)
      for (auto& [m, c] : poly) c = -c;
  return out;
}

LaurentSeries LaurentSeries::evaluate_u(int index, const Rational& value) const {
  LaurentSeries out(lo_, hi_);
  for (const auto& [e, poly] : coeffs_) {
    for (const auto& [m, c] : poly) {
      Monomial reduced = m;
      Rational factor = 1;
      if (auto it = reduced.u.find(index); it != reduced.u.end()) {
        for (int k = 0; k < it->second; ++k) factor *= value;
        reduced.u.erase(it);
      }
      out.add_term(e, c * factor, reduced);
    }
  }
  return out;
}

void LaurentSeries::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    erase_zeros(it->second);
    if (it->second.empty() || it->first > hi_ || it->first < lo_)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  lo_ = std::min(lo_, other.lo_);
  hi_ = std::min(hi_, other.hi_);
  for (const auto& [e, poly] : other.coeffs_) {
    if (e > hi_) continue;
    auto& mine = coeffs_[e];
    for (const auto& [m, c] : poly) mine[m] += c;
  }
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) {
  LaurentSeries negated = other;
  negated *= Rational(-1);
  return *this += negated;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& scalar) {
  for (auto& [e, poly] : coeffs_)
    for (auto& [m, c] : poly) c *= scalar;
  normalize();
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // A product coefficient at e is exact only while every pair (i, e - i) it
  // draws on lies inside both windows, i.e. e <= a.hi + b.lo and e <= b.hi + a.lo.
  int lo = saturating_add(a.lo_, b.lo_);
  int hi = std::min(saturating_add(a.hi_, b.lo_), saturating_add(b.hi_, a.lo_));
  LaurentSeries out(lo, std::max(lo, hi));
  if (hi < lo) return out;
  for (const auto& [ea, pa] : a.coeffs_) {
    for (const auto& [eb, pb] : b.coeffs_) {
      long e = static_cast<long>(ea) + eb;
      if (e > hi) break;
      auto& target = out.coeffs_[static_cast<int>(e)];
      for (const auto& [ma, ca] : pa)
        for (const auto& [mb, cb] : pb) target[ma * mb] += ca * cb;
    }
  }
  out.normalize();
  return out;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, poly] : coeffs_) {
    for (const auto& [m, c] : poly) {
      bool negative = sgn(c) < 0;
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      Rational magnitude = abs(c);
      std::vector<std::string> factors;
      if (e == 1)
        factors.emplace_back("h");
      else if (e != 0)
        factors.push_back("h^" + std::to_string(e));
      if (!m.is_one()) factors.push_back(m.to_string());
      if (factors.empty()) {
        os << fsmaps::to_string(magnitude);
        continue;
      }
      if (magnitude.get_num() != 1) os << magnitude.get_num().get_str() << '*';
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
      if (magnitude.get_den() != 1) os << '/' << magnitude.get_den().get_str();
    }
  }
  if (first) os << '0';
  return os.str();
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }
LaurentSeries substitute_negate_h(const LaurentSeries& a) { return a.negate_h(); }

}  // namespace fsmaps
