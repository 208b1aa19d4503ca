/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sphquad/rational.hpp"

namespace sphquad {

/// Dense univariate polynomial over Q. coefficients()[k] multiplies x^k;
/// the highest stored coefficient is nonzero, the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);

  static Poly constant(const Rational& c);
  /// c * x^power
  static Poly monomial(const Rational& c, std::size_t power);
  static Poly identity() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coefficient(std::size_t power) const;
  /// Throws DomainError on the zero polynomial.
  [[nodiscard]] const Rational& leading() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] Poly derivative() const;
  [[nodiscard]] std::string str() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a * Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact Horner evaluation.
[[nodiscard]] Rational poly_eval(const Poly& p, const Rational& x);

/// Euclidean division a = q*b + r with deg r < deg b. Throws on b == 0.
[[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Scales p to integer coefficients with gcd 1 and a positive leading coefficient.
[[nodiscard]] Poly primitive_part(const Poly& p);

/// Greatest common divisor, normalized by primitive_part. gcd(0, 0) = 0.
[[nodiscard]] Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), normalized by primitive_part. Throws on p == 0.
[[nodiscard]] Poly squarefree_part(const Poly& p);

/// Yun's algorithm: factors[m-1] collects the roots of multiplicity exactly m
/// (each factor squarefree and primitive; constant factors are 1).
/// Throws on p == 0.
[[nodiscard]] std::vector<Poly> squarefree_factorization(const Poly& p);

/// True when a and b differ by a nonzero rational factor.
[[nodiscard]] bool proportional(const Poly& a, const Poly& b);

}  // namespace sphquad
