/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>
#include <set>

#include "internal.hpp"
#include "sphquad/error.hpp"
#include "sphquad/nets.hpp"

namespace sphquad::nets {

namespace {

void check_parts(const IntegerParts& p) {
  if (p.A0 < 0 || p.A1 < 0 || p.A2 < 0) throw DomainError("integer parts must be nonnegative");
  if (p.A3 < 1) throw DomainError("A3 must be at least 1");
}

struct Residual {
  long b0, b1, b2, b3;
  long kappa, i, k, l, m;
};

// Every decoration (kappa, digons) that leaves nonnegative base parts with b3 >= 1.
template <class Fn>
void for_each_residual(const IntegerParts& p, Fn&& fn) {
  for (long kappa = 0; 2 * kappa <= p.A1 && 2 * kappa <= p.A3 - 1; ++kappa)
    for (long i = 0; i <= p.A0; ++i)
      for (long m = 0; i + m <= p.A0; ++m)
        for (long k = 0; k <= p.A2 && i + k + 2 * kappa <= p.A1; ++k)
          for (long l = 0; k + l <= p.A2 && l + m + 2 * kappa <= p.A3 - 1; ++l)
            fn(Residual{p.A0 - i - m, p.A1 - i - k - 2 * kappa, p.A2 - k - l,
                        p.A3 - l - m - 2 * kappa, kappa, i, k, l, m});
}

}  // namespace

namespace detail {

void for_each_exact_net(const IntegerParts& p, const std::function<void(const NetDescriptor&)>& fn) {
  check_parts(p);
  for_each_residual(p, [&fn](const Residual& r) {
    const auto emit = [&](Family f, long mu, long nu, long j = 0) {
      NetDescriptor n{f, mu, nu, r.kappa, j, r.i, r.k, r.l, r.m};
      if (normalize(n) == n && validate(n).empty()) fn(n);
    };
    const bool side_free = r.b0 == 0 && r.b2 == 0;
    if (side_free && r.b1 == 0)
      for (long mu = 0; mu <= r.b3 - 1; ++mu) emit(Family::X, mu, r.b3 - 1 - mu);
    if (side_free && r.b3 == 1 && r.b1 >= 1)
      for (long mu = 0; mu <= 2 * r.b1; ++mu) emit(Family::Xbar, mu, 2 * r.b1 - mu);
    if (side_free && r.b1 >= 1 && r.b3 >= 2) {
      for (Family f : {Family::U, Family::V}) emit(f, r.b3 - 1, r.b1);
      for (Family f : {Family::Ubar, Family::Vbar}) emit(f, r.b1, r.b3 - 1);
    }
    if (side_free && r.b1 == 1)
      for (long mu = 1; mu <= r.b3 - 2; ++mu) emit(Family::Z, mu, r.b3 - 1 - mu);
    if (r.b1 == 0 && r.b2 == 0 && r.b0 >= 1) emit(Family::R, r.b0, r.b3 - 1);
    if (r.b0 == 0 && r.b1 == 0 && r.b2 >= 1) emit(Family::Rbar, r.b3 - 1, r.b2);
    if (r.kappa == 0 && r.b3 == 1 && r.b0 >= 1 && r.b2 >= 1) {
      if (r.b0 == r.b2 && r.b1 <= 1) emit(Family::NablaE, r.b1, 0, r.b0 - 1);
      if (r.b1 == 0 && r.b0 > r.b2) emit(Family::NablaM, r.b0 - r.b2, 0, r.b2 - 1);
      if (r.b1 == 0 && r.b2 > r.b0) emit(Family::NablaMbar, r.b2 - r.b0, 0, r.b0 - 1);
    }
  });
}

}  // namespace detail

std::vector<NetDescriptor> enumerate_nets(const IntegerParts& parts) {
  std::set<NetDescriptor> out;
  std::set<NetDescriptor> visited;
  detail::for_each_exact_net(parts, [&](const NetDescriptor& n) {
    if (visited.count(n)) return;
    const auto cls = equivalence_class(n);
    visited.insert(cls.begin(), cls.end());
    out.insert(cls.front());
  });
  return {out.begin(), out.end()};
}

std::vector<Junction> enumerate_junctions(const IntegerParts& parts) {
  check_parts(parts);
  std::set<Junction> out;
  for_each_residual(parts, [&out](const Residual& r) {
    if (r.b0 != 0 || r.b2 != 0) return;
    const auto emit = [&](JunctionKind kind, long j, long n) {
      const Junction t{kind, j, n, r.kappa, r.i, r.k, r.l, r.m};
      if (validate(t).empty()) out.insert(canonicalize(t));
    };
    if (r.b3 == 1)
      for (long j = 0; j <= r.b1; ++j) {
        emit(JunctionKind::TE, j, r.b1 - j);
        emit(JunctionKind::ET, j, r.b1 - j);
      }
    emit(JunctionKind::TM, r.b1, r.b3 - 1);
    emit(JunctionKind::MbarT, r.b3 - 1, r.b1);
  });
  return {out.begin(), out.end()};
}

long count_u_special(const IntegerParts& p, DeltaReading reading) {
  check_parts(p);
  // all three candidates compared in quarters to stay in integers
  const long excess = std::max(0L, 1 + p.A1 + p.A3 - p.A0 - p.A2);
  const long a3q = 2 * p.A3;       // A3/2
  const long a1q = 2 * (1 + p.A1);  // (1+A1)/2
  const long dq = reading == DeltaReading::literal ? excess : 2 * excess;
  const long minq = std::min({a3q, a1q, dq});
  return minq / 4;
}

long lower_bound(const IntegerParts& p, DeltaReading reading) {
  return p.A3 - 2 * count_u_special(p, reading);
}

}  // namespace sphquad::nets
