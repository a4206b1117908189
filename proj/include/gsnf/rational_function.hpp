#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "gsnf/poly.hpp"
#include "gsnf/rational.hpp"

namespace gsnf {

// Element of Q(q): a quotient of polynomials in q, kept in canonical form
// at all times (gcd(num, den) = 1, den monic). Eager normalization keeps
// the coefficient field cheap inside SNF runs over Q(q)[y].
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly<Rational>::one()) {}
  RationalFunction(long n) : num_(Poly<Rational>(n)), den_(Poly<Rational>::one()) {}  // NOLINT
  RationalFunction(Rational c) : num_(Poly<Rational>(std::move(c))), den_(Poly<Rational>::one()) {}  // NOLINT
  explicit RationalFunction(Poly<Rational> num)
      : num_(std::move(num)), den_(Poly<Rational>::one()) {}
  RationalFunction(Poly<Rational> num, Poly<Rational> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
  }

  static RationalFunction q() { return RationalFunction(Poly<Rational>::var()); }
  // q^k for any integer k (negative exponents land in the denominator).
  static RationalFunction q_power(long k) {
    if (k >= 0)
      return RationalFunction(Poly<Rational>::monomial(Rational(1), static_cast<size_t>(k)));
    return RationalFunction(Poly<Rational>::one(),
                            Poly<Rational>::monomial(Rational(1), static_cast<size_t>(-k)));
  }

  const Poly<Rational>& num() const { return num_; }
  const Poly<Rational>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // Evaluate at q = x; x must not be a pole.
  Rational evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole at evaluation point");
    return num_.evaluate(x) / d;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly<Rational>::one();
      return;
    }
    if (!den_.is_one()) {
      Poly<Rational> g = poly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
      }
    }
    const Rational lc = den_.leading();
    if (!lc.is_one()) {
      const Rational inv = lc.inverse();
      num_.scale(inv);
      den_.scale(inv);
    }
  }

  Poly<Rational> num_, den_;
};

// [k]_q = (1 - q^k)/(1 - q) for any integer k; [0] = 0, [1] = 1, and
// [-k] = -q^{-k} [k].
inline RationalFunction q_integer(long k) {
  static const RationalFunction one_minus_q =
      RationalFunction(Poly<Rational>(std::vector<Rational>{Rational(1), Rational(-1)}));
  return (RationalFunction(1) - RationalFunction::q_power(k)) / one_minus_q;
}

}  // namespace gsnf
