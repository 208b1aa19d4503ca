/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Independent reference computations shared by the unit and acceptance tests.
#ifndef SPHQUAD_TESTS_ORACLES_HPP
#define SPHQUAD_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sphquad/heun.hpp"
#include "sphquad/poly.hpp"

namespace oracle {

using sphquad::Poly;
using sphquad::Rational;

// det(x I - M) by the Leibniz expansion over all permutations.
inline Poly charpoly_leibniz(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total;
  do {
    // entries of x I - M
    Poly term = Poly::constant(1);
    bool zero = false;
    for (std::size_t r = 0; r < n && !zero; ++r) {
      const std::size_t c = perm[r];
      Poly e = Poly::constant(-m[r][c]);
      if (r == c) e = e + Poly::identity();
      if (e.is_zero()) zero = true;
      else term = term * e;
    }
    if (zero) continue;
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Jacobi matrix written out from the closed forms for r_n, q_n, p_n.
inline std::vector<std::vector<Rational>> jacobi_from_formulas(long a0, const Rational& a1,
                                                               const Rational& aa,
                                                               const Rational& ainf,
                                                               const Rational& a) {
  const Rational s = Rational(2) - Rational(a0) - a1 - aa;
  const Rational p = (s * s - ainf * ainf) / Rational(4);
  const auto n = static_cast<std::size_t>(a0);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (long r = 0; r < a0; ++r) {
    const Rational R(r);
    const Rational rn = (R + Rational(1)) * (R + Rational(1) - Rational(a0)) * a;
    const Rational qn = R * ((R - Rational(a0)) * (Rational(1) + a) + a * (Rational(1) - a1) +
                             Rational(1) - aa);
    const Rational pn = (R - Rational(1)) * (R - Rational(1)) + (R - Rational(1)) * s + p;
    const auto i = static_cast<std::size_t>(r);
    m[i][i] = -qn;
    if (r + 1 < a0) m[i][i + 1] = rn;
    if (r > 0) m[i][i - 1] = pn;
  }
  return m;
}

inline bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading() == b * a.leading();
}

// Non-integer rational in (0, 2) with denominator at most 10.
inline Rational random_angle(std::mt19937& rng) {
  std::uniform_int_distribution<long> den(2, 10);
  for (;;) {
    const long q = den(rng);
    std::uniform_int_distribution<long> num(1, 2 * q - 1);
    const long p = num(rng);
    if (p % q != 0) return Rational(p, q);
  }
}

inline Rational random_modulus(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 13);
  for (;;) {
    const Rational a(num(rng), den(rng));
    if (!a.is_zero() && a != Rational(1)) return a;
  }
}

}  // namespace oracle

#endif
