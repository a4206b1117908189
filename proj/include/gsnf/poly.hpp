#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gsnf/rational.hpp"

namespace gsnf {

// Dense univariate polynomial over a field K (K = Rational gives Q[t],
// K = RationalFunction gives Q(q)[y]). Coefficients are stored by
// ascending degree and kept trimmed: the top coefficient is nonzero
// unless the polynomial is zero. degree() of the zero polynomial is the
// sentinel -1, never a valid coefficient index.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(long n) : Poly(K(n)) {}  // NOLINT: implicit constants are convenient
  Poly(K constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(K(1)); }
  static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }
  // c * x^e
  static Poly monomial(K c, size_t e) {
    if (c.is_zero()) return Poly();
    std::vector<K> v(e + 1, K(0));
    v[e] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of x^i; zero beyond the degree.
  const K& coeff(size_t i) const {
    static const K kZero{0};
    return i < c_.size() ? c_[i] : kZero;
  }
  const std::vector<K>& coeffs() const { return c_; }

  const K& leading() const {
    if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
    return c_.back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (K& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& scale(const K& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (K& c : c_) c *= s;
    return *this;
  }
  friend Poly operator*(Poly a, const K& s) { return a.scale(s); }
  friend Poly operator*(const K& s, Poly a) { return a.scale(s); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  K evaluate(const K& x) const {
    K acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    r.scale(leading().inverse());
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b (or r = 0).
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  std::vector<K> rem(a.coeffs());
  std::vector<K> quo(a.degree() - b.degree() + 1, K(0));
  const K lb_inv = b.leading().inverse();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i].is_zero()) continue;
    K f = rem[i] * lb_inv;
    quo[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] -= f * b.coeff(j);
  }
  return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
bool divides(const Poly<K>& d, const Poly<K>& a) {
  if (a.is_zero()) return true;
  if (d.is_zero()) return false;
  return poly_divmod(a, d).second.is_zero();
}

// Exact quotient; throws if the division leaves a remainder.
template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("poly_exact_div: inexact division");
  return q;
}

namespace detail {

// gcd over Q[x] via primitive pseudo-remainder sequences on integer
// coefficient vectors; keeps coefficient sizes tame compared to monic
// Euclid over Q.
Poly<Rational> poly_gcd_rational(const Poly<Rational>& a, const Poly<Rational>& b);

}  // namespace detail

// Monic gcd. gcd(0,0) is an error.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd(0, 0)");
  if constexpr (std::is_same_v<K, Rational>) {
    return detail::poly_gcd_rational(a, b);
  } else {
    while (!b.is_zero()) {
      Poly<K> r = poly_divmod(a, b).second;
      a = std::move(b);
      b = r.monic();  // unit normalization per step tames coefficient growth
    }
    return a.monic();
  }
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g = monic gcd(a, b).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_bezout(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_bezout(0, 0)");
  Poly<K> r0 = a, r1 = b;
  Poly<K> u0 = Poly<K>::one(), u1 = Poly<K>::zero();
  Poly<K> v0 = Poly<K>::zero(), v1 = Poly<K>::one();
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    Poly<K> u = u0 - q * u1;
    u0 = std::exchange(u1, std::move(u));
    Poly<K> v = v0 - q * v1;
    v0 = std::exchange(v1, std::move(v));
  }
  const K lc_inv = r0.leading().inverse();
  return {r0.scale(lc_inv), u0.scale(lc_inv), v0.scale(lc_inv)};
}

template <class K>
Poly<K> poly_lcm(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<K>();
  return poly_exact_div(a * b, poly_gcd(a, b)).monic();
}

}  // namespace gsnf
