/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>
#include <optional>

#include "internal.hpp"
#include "sphquad/error.hpp"
#include "sphquad/nets.hpp"

namespace sphquad::nets {

namespace {

NetDescriptor net(Family f, long mu, long nu, long j = 0, long i = 0, long k = 0, long l = 0,
                  long m = 0) {
  return NetDescriptor{f, mu, nu, 0, j, i, k, l, m};
}

// A3 = 1: the integer corner is a plain vertex.
NetDescriptor witness_corner_one(long A0, long A1, long A2) {
  if (A1 >= A0 + A2) {
    const long e = A1 - A0 - A2;
    return e > 0 ? net(Family::Xbar, e, e, 0, A0, A2) : net(Family::X, 0, 0, 0, A0, A2);
  }
  if (A0 >= A1 + A2 + 1) {
    if (A2 >= 1) return net(Family::NablaM, A0 - A1 - A2, 0, A2 - 1, A1);
    return net(Family::R, A0 - A1, 0, 0, A1);
  }
  if (A2 >= A0 + A1 + 1) {
    if (A0 >= 1) return net(Family::NablaMbar, A2 - A1 - A0, 0, A0 - 1, 0, A1);
    return net(Family::Rbar, 0, A2 - A1, 0, 0, A1);
  }
  if ((A0 + A1 + A2) % 2 == 0)
    return net(Family::NablaE, 0, 0, (A0 + A2 - A1) / 2 - 1, (A0 + A1 - A2) / 2,
               (A1 + A2 - A0) / 2);
  return net(Family::NablaE, 1, 0, (A0 + A2 - A1 - 1) / 2, (A0 + A1 - A2 - 1) / 2,
             (A1 + A2 - A0 - 1) / 2);
}

std::optional<NetDescriptor> constructive(const IntegerParts& p) {
  const long A0 = p.A0, A1 = p.A1, A2 = p.A2, A3 = p.A3;
  if (A3 == 1) return witness_corner_one(A0, A1, A2);
  const long E = A1 + A3 - A0 - A2 - 1;
  if (E < 0) {
    // pad the integer corner with digons on L3 and L4
    const long m = std::min(A0, A3 - 1);
    const long l = A3 - 1 - m;
    NetDescriptor n = witness_corner_one(A0 - m, A1, A2 - l);
    n.l += l;
    n.m += m;
    return n;
  }
  for (long t = 0; t <= A1; ++t) {
    const long i = t, m = A0 - t, k = A1 - t, l = A2 - A1 + t;
    if (std::min({i, m, k, l}) < 0) continue;
    if (E == 0) return net(Family::X, 0, 0, 0, i, k, l, m);
    for (long nu = 0; nu <= E; ++nu) {
      const NetDescriptor n = net(Family::X, E - nu, nu, 0, i, k, l, m);
      if (validate(n).empty()) return n;
    }
  }
  for (long t = 0; t <= A1; ++t) {
    const long i = t, m = A0 - t, k = A1 - E - t, l = A2 - A1 + E + t;
    if (std::min({i, m, k, l}) < 0) continue;
    for (long nu = 0; nu <= 2 * E; ++nu) {
      const NetDescriptor n = net(Family::Xbar, 2 * E - nu, nu, 0, i, k, l, m);
      if (validate(n).empty()) return n;
    }
  }
  if (A1 > A0 + A2 && A3 - 1 > A0 + A2) return net(Family::U, A3 - 1 - A0, A1 - A2, 0, 0, A2, 0, A0);
  return std::nullopt;
}

}  // namespace

NetDescriptor existence_witness(const IntegerParts& parts) {
  if (parts.A0 < 0 || parts.A1 < 0 || parts.A2 < 0) throw DomainError("integer parts must be nonnegative");
  if (parts.A3 < 1) throw DomainError("A3 must be at least 1");
  std::optional<NetDescriptor> w = constructive(parts);
  if (!w) {
    // remaining cases need pseudo-diagonals; search the X, Xbar, U, Ubar families
    detail::for_each_exact_net(parts, [&w](const NetDescriptor& n) {
      if (w) return;
      if (n.family == Family::X || n.family == Family::Xbar || n.family == Family::U ||
          n.family == Family::Ubar)
        w = n;
    });
  }
  if (!w || !validate(*w).empty() || integer_parts(*w) != parts)
    throw InvariantError("no witness constructed for parts " + parts.str());
  return *w;
}

}  // namespace sphquad::nets
