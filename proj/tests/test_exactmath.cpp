/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "sphquad/error.hpp"
#include "sphquad/poly.hpp"
#include "sphquad/rational.hpp"
#include "sphquad/sturm.hpp"

using namespace sphquad;

namespace {

Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

// 2x^2 - 3/2 x + 3/16
Poly g2() { return P({Rational(3, 16), Rational(-3, 2), Rational(2)}); }

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-20, 20), den(1, 9);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) c.emplace_back(num(rng), den(rng));
  return Poly(c);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/9").str() == "1/3");
  CHECK_THROWS_AS((void)Rational::parse(" 3/9"), ParseError);
  CHECK_THROWS_AS((void)Rational::parse("0.5"), ParseError);
  CHECK_THROWS_AS((void)Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS((void)Rational::parse("x"), ParseError);
  CHECK(Rational(-7, 2).floor_long() == -4);
  CHECK(Rational(7, 2).frac() == Rational(1, 2));
}

TEST_CASE("rational arithmetic is exact") {
  Rational s;
  for (long n = 1; n <= 50; ++n) s += Rational(1, n * (n + 1));
  CHECK(s == Rational(50, 51));
  CHECK(Rational(1, 3) * Rational(3) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(g2(), Rational(0)) == Rational(3, 16));
  CHECK(poly_eval(Poly::identity(), Rational(5)) == Rational(5));
  CHECK(poly_eval(g2(), Rational(1)) == Rational(11, 16));
  CHECK(poly_eval(Poly(), Rational(3)).is_zero());
}

TEST_CASE("poly text") {
  CHECK(g2().str() == "2*x^2 - 3/2*x + 3/16");
  CHECK(Poly().str() == "0");
  CHECK(P({0, -1}).str() == "-x");
}

TEST_CASE("squarefree_part") {
  const Poly x = Poly::identity();
  CHECK(squarefree_part(x * x) == x);
  CHECK(proportional(squarefree_part(g2()), g2()));
  const Poly a = x - Poly::constant(1), b = x + Poly::constant(2);
  CHECK(proportional(squarefree_part(a * a * b), a * b));
  CHECK_THROWS_AS((void)squarefree_part(Poly()), DomainError);

  const auto f = squarefree_factorization(a * a * b * b * b * x);
  REQUIRE(f.size() == 3);
  CHECK(proportional(f[0], x));
  CHECK(proportional(f[1], a));
  CHECK(proportional(f[2], b));
}

TEST_CASE("gcd output is primitive with positive leading coefficient") {
  const Poly x = Poly::identity();
  const Poly a = (x - Poly::constant(Rational(1, 2))) * Rational(-6);
  const Poly g = gcd(a * (x + Poly::constant(1)), a * (x - Poly::constant(3)));
  CHECK(g == P({-1, 2}));
}

TEST_CASE("count_real_roots") {
  CHECK(count_real_roots(P({1, 0, 1})) == 0);
  const Poly x = Poly::identity();
  const Poly cubic = x * (x - Poly::constant(1)) * (x + Poly::constant(1));
  CHECK(count_real_roots(cubic) == 3);
  CHECK(count_real_roots(g2()) == 2);
  // half-open (lo, hi]
  CHECK(count_real_roots(cubic, Rational(0), Rational(1)) == 1);
  CHECK(count_real_roots(cubic, Rational(-1), Rational(0)) == 1);
  CHECK(count_real_roots(cubic, std::nullopt, Rational(-1)) == 1);
  CHECK_THROWS_AS((void)count_real_roots(Poly()), DomainError);

  const Poly rep = (x - Poly::constant(1)) * (x - Poly::constant(1)) * (x + Poly::constant(2));
  CHECK(count_real_roots(rep) == 2);
  CHECK(count_real_roots_with_multiplicity(rep) == 3);
  CHECK(count_real_roots_with_multiplicity(P({1, 0, 1}) * P({1, 0, 1})) == 0);
}

TEST_CASE("isolate_real_roots") {
  const auto one = isolate_real_roots(Poly::identity(), Rational(1, 8));
  REQUIRE(one.size() == 1);
  CHECK(one[0].lo < Rational(0));
  CHECK(one[0].hi >= Rational(0));
  CHECK(isolate_real_roots(P({1, 0, 1}), Rational(1, 8)).empty());

  // roots (3 -+ sqrt 3)/8; oracle: r in (lo, hi] iff lo < r <= hi, checked on the
  // quadratic 64 r^2 - 48 r + 6 = 0 by sign change
  const auto iv = isolate_real_roots(g2(), Rational(1, 1024));
  REQUIRE(iv.size() == 2);
  const double r[2] = {(3 - std::sqrt(3.0)) / 8, (3 + std::sqrt(3.0)) / 8};
  for (int t = 0; t < 2; ++t) {
    CHECK(iv[t].hi - iv[t].lo <= Rational(1, 1024));
    CHECK(iv[t].lo.to_double() < r[t]);
    CHECK(iv[t].hi.to_double() >= r[t]);
    CHECK(poly_eval(g2(), iv[t].lo).sign() * poly_eval(g2(), iv[t].hi).sign() <= 0);
  }
  CHECK(iv[0].hi <= iv[1].lo);
  CHECK(r[0] == doctest::Approx(0.1585).epsilon(1e-3));
  CHECK(r[1] == doctest::Approx(0.5915).epsilon(1e-3));
  CHECK_THROWS_AS((void)isolate_real_roots(g2(), Rational(0)), DomainError);
}

TEST_CASE("root counts are additive over split points") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = random_poly(rng, 7);
    if (p.is_zero()) continue;
    const Rational m(num(rng), den(rng));
    const Rational lo = m - Rational(den(rng)), hi = m + Rational(den(rng));
    CHECK(count_real_roots(p, lo, hi) == count_real_roots(p, lo, m) + count_real_roots(p, m, hi));
    CHECK(count_real_roots(p) == count_real_roots(p, std::nullopt, m) + count_real_roots(p, m, std::nullopt));
    CHECK(static_cast<int>(count_real_roots(p)) <= std::max(p.degree(), 0));
    if (p.degree() > 0)
      CHECK(isolate_real_roots(p, Rational(1, 16)).size() == count_real_roots(p));
  }
}

TEST_CASE("roots with known rational positions") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 6), cnt(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<Rational> roots;
    Poly p = Poly::constant(1);
    const int n = cnt(rng);
    std::size_t with_mult = 0;
    for (int t = 0; t < n; ++t) {
      const Rational r(num(rng), den(rng));
      roots.insert(r);
      p = p * (Poly::identity() - Poly::constant(r));
      ++with_mult;
    }
    p = p * P({1, 0, 1});  // a complex pair
    CHECK(count_real_roots(p) == roots.size());
    CHECK(count_real_roots_with_multiplicity(p) == with_mult);
    const auto iv = isolate_real_roots(p, Rational(1, 64));
    REQUIRE(iv.size() == roots.size());
    std::size_t t = 0;
    for (const auto& r : roots) {
      CHECK(iv[t].lo < r);
      CHECK(r <= iv[t].hi);
      ++t;
    }
  }
}

TEST_CASE("polynomial ring axioms") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Poly());
    if (!b.is_zero()) {
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}
