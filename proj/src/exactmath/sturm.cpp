/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sphquad/sturm.hpp"

#include <algorithm>

#include "sphquad/error.hpp"

namespace sphquad {

namespace {

int sign_at_infinity(const Poly& p, bool negative) {
  const int s = p.leading().sign();
  return (negative && p.degree() % 2 == 1) ? -s : s;
}

}  // namespace

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() <= 0) return;
  chain_.push_back(chain_.front().derivative());
  for (;;) {
    const Poly& a = chain_[chain_.size() - 2];
    const Poly& b = chain_.back();
    Poly r = divmod(a, b).second;
    if (r.is_zero()) break;
    // primitive_part makes the leading coefficient positive; put the sign of -r back
    Poly pp = primitive_part(r);
    chain_.push_back(r.leading().sign() > 0 ? -pp : pp);
  }
}

std::size_t SturmSequence::variations(const Endpoint& x, bool from_below) const {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& q : chain_) {
    const int s = x ? poly_eval(q, *x).sign() : sign_at_infinity(q, from_below);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::size_t SturmSequence::count(const Endpoint& lo, const Endpoint& hi) const {
  if (lo && hi && *hi <= *lo) return 0;
  const std::size_t vlo = variations(lo, true);
  const std::size_t vhi = variations(hi, false);
  return vlo >= vhi ? vlo - vhi : 0;
}

std::size_t count_real_roots(const Poly& p, const Endpoint& lo, const Endpoint& hi) {
  return SturmSequence(p).count(lo, hi);
}

std::size_t count_real_roots_with_multiplicity(const Poly& p, const Endpoint& lo,
                                               const Endpoint& hi) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  std::size_t total = 0;
  const auto factors = squarefree_factorization(p);
  for (std::size_t m = 0; m < factors.size(); ++m) {
    if (factors[m].degree() <= 0) continue;
    total += (m + 1) * SturmSequence(factors[m]).count(lo, hi);
  }
  return total;
}

Rational root_bound(const Poly& p) {
  if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
  Rational m;
  const Rational lead = p.leading().abs();
  for (int k = 0; k < p.degree(); ++k) {
    const Rational r = p.coefficients()[static_cast<std::size_t>(k)].abs() / lead;
    if (r > m) m = r;
  }
  return m + Rational(1);
}

std::vector<RootInterval> isolate_real_roots(const Poly& p, const Rational& width) {
  if (width.sign() <= 0) throw DomainError("isolation width must be positive");
  const SturmSequence seq(p);
  std::vector<RootInterval> out;
  if (seq.squarefree().degree() <= 0) return out;

  const Rational bound = root_bound(seq.squarefree());
  struct Pending {
    Rational lo, hi;
    std::size_t n;
  };
  std::vector<Pending> stack;
  const std::size_t total = seq.count(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  const Rational half(1, 2);
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.n == 1 && cur.hi - cur.lo <= width) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) * half;
    const std::size_t left = seq.count(cur.lo, mid);
    if (left > 0) stack.push_back({cur.lo, mid, left});
    if (cur.n > left) stack.push_back({mid, cur.hi, cur.n - left});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace sphquad
