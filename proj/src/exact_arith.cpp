#include <gmpxx.h>

#include <utility>
#include <vector>

#include "gsnf/poly.hpp"
#include "gsnf/rational.hpp"

namespace gsnf::detail {

namespace {

using ZVec = std::vector<mpz_class>;  // ascending degree, trimmed

void trim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Clear denominators and strip integer content: primitive Z[x] image.
ZVec primitive_part(const Poly<Rational>& p) {
  mpz_class den_lcm(1);
  for (const Rational& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  ZVec v;
  v.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs())
    v.push_back(c.numerator() * (den_lcm / c.denominator()));
  mpz_class content(0);
  for (const mpz_class& z : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content > 1)
    for (mpz_class& z : v) z /= content;
  trim(v);
  return v;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0), followed by content
// stripping; the multiplier powers of lc(b) are irrelevant up to units.
ZVec pseudo_rem_primitive(ZVec a, const ZVec& b) {
  const size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const mpz_class la = a.back();
    const size_t shift = a.size() - b.size();
    for (mpz_class& z : a) z *= lb;
    for (size_t j = 0; j < db + 1; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  mpz_class content(0);
  for (const mpz_class& z : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content > 1)
    for (mpz_class& z : a) z /= content;
  return a;
}

Poly<Rational> to_monic_poly(const ZVec& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  const mpz_class& lead = v.back();
  for (const mpz_class& z : v) c.emplace_back(z, lead);
  return Poly<Rational>(std::move(c));
}

}  // namespace

Poly<Rational> poly_gcd_rational(const Poly<Rational>& a, const Poly<Rational>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZVec u = primitive_part(a);
  ZVec v = primitive_part(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    ZVec r = pseudo_rem_primitive(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  return to_monic_poly(u);
}

}  // namespace gsnf::detail
