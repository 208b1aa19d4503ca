/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sphquad/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "sphquad/error.hpp"

namespace sphquad {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const { return poly_eval(*this, x); }

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

std::string Poly::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    const bool unit = mag == Rational(1);
    if (!unit || k == 0) os << mag;
    if (k > 0) os << (unit ? "" : "*") << "x";
    if (k > 1) os << "^" << k;
  }
  return os;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lead = b.leading();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top].is_zero()) continue;
    const Rational f = rem[top] / lead;
    quo[top - db] = f;
    for (std::size_t k = 0; k <= db; ++k) rem[top - db + k] -= f * bc[k];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class lcm_den = 1;
  for (const auto& c : p.coefficients())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(p.coefficients().size());
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.raw().get_num() * (lcm_den / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (p.leading().sign() < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(mpq_class(v / g));
  return Poly(std::move(out));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return Poly::constant(Rational(1));
  return primitive_part(divmod(p, gcd(p, p.derivative())).first);
}

std::vector<Poly> squarefree_factorization(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree factorization of the zero polynomial");
  std::vector<Poly> factors;
  if (p.degree() == 0) return factors;
  const Poly dp = p.derivative();
  Poly g = gcd(p, dp);
  Poly b = divmod(p, g).first;
  Poly c = divmod(dp, g).first;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly a = gcd(b, d);
    factors.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return primitive_part(a) == primitive_part(b);
}

}  // namespace sphquad
