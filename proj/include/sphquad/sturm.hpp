/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sphquad/poly.hpp"
#include "sphquad/rational.hpp"

namespace sphquad {

/// Interval endpoint; std::nullopt stands for -inf (as a lower end) or +inf (upper).
using Endpoint = std::optional<Rational>;

/// Half-open interval (lo, hi] isolating one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Sturm chain of the squarefree part of a polynomial.
class SturmSequence {
 public:
  /// Throws DomainError on the zero polynomial.
  explicit SturmSequence(const Poly& p);

  /// Sign variations of the chain at x (zeros skipped); nullopt means
  /// -inf when from_below is true and +inf otherwise.
  [[nodiscard]] std::size_t variations(const Endpoint& x, bool from_below) const;

  /// Distinct real roots in (lo, hi].
  [[nodiscard]] std::size_t count(const Endpoint& lo, const Endpoint& hi) const;

  [[nodiscard]] const Poly& squarefree() const { return chain_.front(); }
  [[nodiscard]] const std::vector<Poly>& chain() const { return chain_; }

 private:
  std::vector<Poly> chain_;
};

/// Distinct real roots of p in (lo, hi]. Throws DomainError on p == 0.
[[nodiscard]] std::size_t count_real_roots(const Poly& p, const Endpoint& lo = std::nullopt,
                                           const Endpoint& hi = std::nullopt);

/// Real roots of p in (lo, hi] counted with multiplicity.
[[nodiscard]] std::size_t count_real_roots_with_multiplicity(const Poly& p,
                                                             const Endpoint& lo = std::nullopt,
                                                             const Endpoint& hi = std::nullopt);

/// Cauchy bound: every real root lies strictly inside (-B, B).
[[nodiscard]] Rational root_bound(const Poly& p);

/// One (lo, hi] interval per distinct real root, each of length <= width,
/// sorted and pairwise disjoint. Throws DomainError on p == 0 or width <= 0.
[[nodiscard]] std::vector<RootInterval> isolate_real_roots(const Poly& p, const Rational& width);

}  // namespace sphquad
