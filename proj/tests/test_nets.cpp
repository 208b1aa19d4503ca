/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "equivalence_cases.hpp"
#include "sphquad/error.hpp"
#include "sphquad/nets.hpp"

using namespace sphquad;
using namespace sphquad::nets;
using eqcases::net;

namespace {

IntegerParts parts(long a0, long a1, long a2, long a3) { return {a0, a1, a2, a3}; }

bool contains(const std::vector<NetDescriptor>& v, const NetDescriptor& n) {
  return std::find(v.begin(), v.end(), n) != v.end();
}

// Parts written out from the family table and the decoration vectors
// i (1,1,0,0), k (0,1,1,0), l (0,0,1,1), m (1,0,0,1), kappa (0,2,0,2).
IntegerParts oracle_parts(const NetDescriptor& n) {
  long b[4] = {0, 0, 0, 1};
  switch (n.family) {
    case Family::X: b[3] = n.mu + n.nu + 1; break;
    case Family::Xbar: b[1] = (n.mu + n.nu) / 2; break;
    case Family::R: b[0] = n.mu; b[3] = n.nu + 1; break;
    case Family::Rbar: b[2] = n.nu; b[3] = n.mu + 1; break;
    case Family::U:
    case Family::V: b[1] = n.nu; b[3] = n.mu + 1; break;
    case Family::Ubar:
    case Family::Vbar: b[1] = n.mu; b[3] = n.nu + 1; break;
    case Family::Z: b[1] = 1; b[3] = n.mu + n.nu + 1; break;
    case Family::NablaE: b[0] = n.j + 1; b[1] = n.mu; b[2] = n.j + 1; break;
    case Family::NablaM: b[0] = n.j + 1 + n.mu; b[2] = n.j + 1; break;
    case Family::NablaMbar: b[0] = n.j + 1; b[2] = n.j + 1 + n.mu; break;
  }
  return {b[0] + n.i + n.m, b[1] + n.i + n.k + 2 * n.kappa, b[2] + n.k + n.l,
          b[3] + n.l + n.m + 2 * n.kappa};
}

// Every descriptor in a box large enough for the given parts.
std::set<NetDescriptor> brute_force(const IntegerParts& p) {
  std::set<NetDescriptor> out;
  const long box = 2 * p.A1 + p.A3 + 1;
  for (int f = 0; f <= static_cast<int>(Family::NablaMbar); ++f)
    for (long kappa = 0; 2 * kappa <= p.A1 && 2 * kappa < p.A3; ++kappa)
      for (long i = 0; i <= p.A0; ++i)
        for (long m = 0; i + m <= p.A0; ++m)
          for (long k = 0; k <= p.A2 && i + k + 2 * kappa <= p.A1; ++k)
            for (long l = 0; k + l <= p.A2 && l + m + 2 * kappa < p.A3; ++l)
              for (long mu = 0; mu <= box; ++mu)
                for (long nu = 0; nu <= box; ++nu)
                  for (long j = 0; j <= p.A0; ++j) {
                    const NetDescriptor n = net(static_cast<Family>(f), mu, nu, kappa, i, k, l, m, j);
                    if (oracle_parts(n) != p || !validate(n).empty()) continue;
                    out.insert(canonicalize(n));
                  }
  return out;
}

}  // namespace

TEST_CASE("integer_parts examples") {
  CHECK(integer_parts(net(Family::X, 1, 0, 0, 0, 0, 0, 0)) == parts(0, 0, 0, 2));
  CHECK(integer_parts(net(Family::U, 1, 1, 1, 0, 0, 0, 0)) == parts(0, 3, 0, 4));
  CHECK(integer_parts(net(Family::V, 1, 1, 1, 1, 0, 0, 0)) == parts(1, 4, 0, 4));
  CHECK(integer_parts(net(Family::Xbar, 3, 1, 1, 0, 0, 0, 1)) == parts(1, 4, 0, 4));
  CHECK_THROWS_AS((void)integer_parts(net(Family::X, 2, 0, 0, 1, 0, 0, 0)), DomainError);
}

TEST_CASE("validate examples") {
  const auto v = validate(net(Family::X, 2, 0, 0, 1, 0, 0, 0));
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("mu<=1") != std::string::npos);
  CHECK(!validate(net(Family::R, 1, 0, 1, 0, 0, 0, 0)).empty());
  for (long i = 0; i <= 2; ++i)
    for (long k = 0; k <= 2; ++k)
      for (long l = 0; l <= 2; ++l)
        for (long m = 0; m <= 2; ++m) CHECK(validate(net(Family::U, 1, 1, 0, i, k, l, m)).empty());
  CHECK(!validate(net(Family::Xbar, 1, 2, 0, 0, 0, 0, 0)).empty());
  CHECK(!validate(net(Family::U, 2, 1, 0, 1, 0, 0, 0)).empty());
  CHECK(!validate(net(Family::X, 0, 0, 0, -1, 0, 0, 0)).empty());
  CHECK(!validate(net(Family::X, 0, 0, 0, 0, 0, 0, 0, 1)).empty());
}

TEST_CASE("junction validity and parts") {
  const Junction d = parse_junction("Mbar1+T1^1");
  CHECK(validate(d).empty());
  CHECK(integer_parts(d) == parts(0, 3, 0, 4));
  CHECK(!validate(parse_junction("T2+E2+D(i=0,k=0,l=0,m=1)")).empty());
}

TEST_CASE("canonicalize examples") {
  // X_{mu,1} with k > 0 and U_{mu,1} with (i, k-1, l+1, m)
  for (long mu = 0; mu <= 3; ++mu)
    for (long kappa = 0; kappa <= 2; ++kappa) {
      const auto x = net(Family::X, mu, 1, kappa, 0, 2, 1, 1);
      const auto u = net(Family::U, mu, 1, kappa, 0, 1, 2, 1);
      CHECK(canonicalize(x) == canonicalize(u));
    }
  // Xbar_{2,2nu} with m > 0 and U_{1,nu} with (i+1, k, l, m-1)
  for (long nu = 1; nu <= 3; ++nu) {
    const auto x = net(Family::Xbar, 2, 2 * nu, 1, 0, 1, 0, 2);
    const auto u = net(Family::U, 1, nu, 1, 1, 1, 0, 1);
    CHECK(canonicalize(x) == canonicalize(u));
  }
  const auto plain = net(Family::U, 2, 3, 1, 0, 0, 0, 0);
  CHECK(canonicalize(plain) == plain);
  // aliases
  CHECK(canonicalize(net(Family::U, 3, 0, 0, 0, 0, 0, 0)) == net(Family::X, 3, 0, 0, 0, 0, 0, 0));
  CHECK(normalize(net(Family::V, 0, 2, 0, 0, 0, 0, 0)) == net(Family::Xbar, 1, 3, 0, 0, 0, 0, 0));
  CHECK_THROWS_AS((void)canonicalize(net(Family::X, 2, 0, 0, 1, 0, 0, 0)), DomainError);
}

TEST_CASE("the ten equivalence cases hold for all indices up to 4") {
  for (const auto& c : eqcases::cases()) {
    CAPTURE(c.number);
    const auto o = eqcases::sweep(c);
    CAPTURE(o.first_problem);
    CHECK(o.checked > 0);
    CHECK(o.mismatched == 0);
  }
}

TEST_CASE("cases 7 and 8 as printed do not preserve the integer parts") {
  // Z_{mu,1} against V_{mu,1} with (i, k+1, l-1, m)
  const auto z = net(Family::Z, 2, 1, 0, 0, 1, 1, 0);
  const auto v = net(Family::V, 2, 1, 0, 0, 2, 0, 0);
  CHECK(validate(v).empty());
  CHECK(integer_parts(z) != integer_parts(v));
  const auto z8 = net(Family::Z, 1, 2, 0, 1, 0, 0, 1);
  const auto v8 = net(Family::Vbar, 1, 2, 0, 0, 0, 0, 2);
  CHECK(validate(v8).empty());
  CHECK(integer_parts(z8) != integer_parts(v8));
}

TEST_CASE("canonicalize is idempotent and keeps parts") {
  for (long a0 = 0; a0 <= 3; ++a0)
    for (long a1 = 0; a1 <= 4; ++a1)
      for (long a2 = 0; a2 <= 3; ++a2)
        for (long a3 = 1; a3 <= 4; ++a3) {
          const IntegerParts p = parts(a0, a1, a2, a3);
          for (const auto& n : enumerate_nets(p)) {
            CHECK(canonicalize(n) == n);
            CHECK(integer_parts(n) == p);
            for (const auto& e : equivalence_class(n)) {
              CHECK(canonicalize(e) == n);
              CHECK(integer_parts(e) == p);
            }
          }
        }
}

TEST_CASE("library parts agree with the table") {
  for (int f = 0; f <= static_cast<int>(Family::NablaMbar); ++f)
    for (long mu = 0; mu <= 4; ++mu)
      for (long nu = 0; nu <= 4; ++nu)
        for (long kappa = 0; kappa <= 2; ++kappa)
          for (long d = 0; d < 16; ++d)
            for (long j = 0; j <= 2; ++j) {
              const auto n = net(static_cast<Family>(f), mu, nu, kappa, d & 1, (d >> 1) & 1, (d >> 2) & 1,
                                 (d >> 3) & 1, j);
              if (!validate(n).empty() || normalize(n) != n) continue;
              CHECK(integer_parts(n) == oracle_parts(n));
            }
}

TEST_CASE("enumerate_nets examples") {
  const auto one = enumerate_nets(parts(0, 0, 0, 1));
  CHECK(contains(one, net(Family::X, 0, 0, 0, 0, 0, 0, 0)));
  const auto two = enumerate_nets(parts(0, 0, 0, 2));
  CHECK(contains(two, canonicalize(net(Family::X, 1, 0, 0, 0, 0, 0, 0))));
  CHECK(contains(two, canonicalize(net(Family::X, 0, 1, 0, 0, 0, 0, 0))));
  const auto ex = enumerate_nets(parts(1, 4, 0, 4));
  CHECK(contains(ex, canonicalize(net(Family::V, 1, 1, 1, 1, 0, 0, 0))));
}

TEST_CASE("enumerate_nets matches a brute-force search") {
  for (long a0 = 0; a0 <= 2; ++a0)
    for (long a1 = 0; a1 <= 3; ++a1)
      for (long a2 = 0; a2 <= 2; ++a2)
        for (long a3 = 1; a3 <= 3; ++a3) {
          const IntegerParts p = parts(a0, a1, a2, a3);
          CAPTURE(p.str());
          const auto got = enumerate_nets(p);
          const std::set<NetDescriptor> got_set(got.begin(), got.end());
          CHECK(got_set.size() == got.size());
          CHECK(got_set == brute_force(p));
        }
}

TEST_CASE("enumerate_junctions") {
  CHECK(enumerate_junctions(parts(0, 0, 0, 1)).empty());
  const Junction d = parse_junction("Mbar1+T1^1");
  const auto js = enumerate_junctions(integer_parts(d));
  CHECK(std::find(js.begin(), js.end(), canonicalize(d)) != js.end());
  for (const auto& j : enumerate_junctions(parts(1, 4, 0, 4))) CHECK(integer_parts(j) == parts(1, 4, 0, 4));
  std::size_t links = 0;
  for (const auto& c : build_chains(parts(1, 4, 0, 4)).chains) links += c.length();
  CHECK(enumerate_junctions(parts(1, 4, 0, 4)).size() == links);
}

TEST_CASE("adjacency") {
  const auto [u, v] = adjacency(parse_junction("Mbar1+T1^1"));
  CHECK(u == net(Family::U, 1, 1, 1, 0, 0, 0, 0));
  CHECK(v == net(Family::V, 1, 1, 1, 0, 0, 0, 0));
  for (long j = 1; j <= 3; ++j)
    for (long n = 1; n <= 3; ++n) {
      Junction t;
      t.kind = JunctionKind::TM;
      t.j = j;
      t.n = n;
      t.kappa = 1;
      const auto [a, b] = adjacency(t);
      CHECK(a.family == Family::Ubar);
      CHECK(b.family == Family::Vbar);
      CHECK(a.mu == j);
      CHECK(b.nu == n);
      t.kind = JunctionKind::TE;
      const auto [x, y] = adjacency(t);
      CHECK(x == net(Family::Xbar, 2 * j, 2 * n, 1, 0, 0, 0, 0));
      CHECK(y == net(Family::Xbar, 2 * j - 1, 2 * n + 1, 1, 0, 0, 0, 0));
    }
  for (long a3 = 1; a3 <= 5; ++a3)
    for (long a1 = 0; a1 <= 5; ++a1)
      for (const auto& t : enumerate_junctions(parts(1, a1, 1, a3))) {
        const auto [a, b] = adjacency(t);
        CHECK(integer_parts(a) == integer_parts(t));
        CHECK(integer_parts(b) == integer_parts(t));
      }
}

TEST_CASE("every net has one or two junctions and chain ends have one") {
  for (long a1 = 0; a1 <= 5; ++a1)
    for (long a3 = 1; a3 <= 5; ++a3) {
      const IntegerParts p = parts(1, a1, 0, a3);
      std::map<NetDescriptor, int> degree;
      for (const auto& n : enumerate_nets(p)) degree[n] = 0;
      for (const auto& t : enumerate_junctions(p)) {
        const auto [a, b] = adjacency(t);
        degree[canonicalize(a)] += 1;
        degree[canonicalize(b)] += 1;
      }
      const auto cs = build_chains(p);
      for (const auto& c : cs.chains)
        for (std::size_t t = 0; t < c.nets.size(); ++t) {
          const bool end = t == 0 || t + 1 == c.nets.size();
          const int want = c.nets.size() == 1 ? 0 : (end ? 1 : 2);
          CHECK(degree[c.nets[t]] == want);
        }
    }
}

TEST_CASE("chains for (1,4,0,4)") {
  const auto cs = build_chains(parts(1, 4, 0, 4));
  CHECK(cs.violations.empty());
  CHECK(cs.chains.size() == 4);
  CHECK(cs.count(ChainKind::aa) == 2);
  CHECK(cs.count(ChainKind::bb) == 2);
  CHECK(cs.count(ChainKind::ab) == 0);
  bool found = false;
  for (const auto& c : cs.chains) {
    if (c.kind != ChainKind::aa || c.length() != 3) continue;
    found = true;
    std::vector<std::string> names;
    for (const auto& n : c.nets) names.push_back(to_string(n));
    CHECK(names == std::vector<std::string>{"Xbar[0,4]^1+D(i=0,k=0,l=0,m=1)", "Xbar[1,3]^1+D(i=0,k=0,l=0,m=1)",
                                            "Xbar[2,2]^1+D(i=0,k=0,l=0,m=1)", "Xbar[3,1]^1+D(i=0,k=0,l=0,m=1)"});
    // Xbar[3,1]^1 with m = 1 is the other form of V^1_{1,1} with a digon on L1
    CHECK(canonicalize(net(Family::V, 1, 1, 1, 1, 0, 0, 0)) == c.nets.back());
    std::size_t u_ends = 0;
    for (const auto& n : c.nets)
      for (const auto& e : equivalence_class(n))
        if (is_aa_end(e)) {
          ++u_ends;
          break;
        }
    CHECK(u_ends == 1);
  }
  CHECK(found);
}

TEST_CASE("chains with A0 = A1 = A2 = 0 are single X nets") {
  for (long a3 = 1; a3 <= 6; ++a3) {
    const auto cs = build_chains(parts(0, 0, 0, a3));
    CHECK(cs.violations.empty());
    CHECK(cs.chains.size() == static_cast<std::size_t>(a3));
    for (const auto& c : cs.chains) {
      CHECK(c.kind == ChainKind::ab);
      CHECK(c.length() == 0);
      CHECK(c.nets.front().family == Family::X);
    }
  }
}

TEST_CASE("count_u_special and lower_bound") {
  CHECK(count_u_special(parts(0, 0, 0, 4)) == 0);
  CHECK(count_u_special(parts(1, 4, 0, 4)) == 2);
  CHECK(count_u_special(parts(0, 0, 1, 4)) == 0);
  CHECK(lower_bound(parts(0, 0, 1, 4)) == 4);
  CHECK(lower_bound(parts(1, 4, 0, 4)) == 0);
  CHECK(lower_bound(parts(0, 0, 0, 1)) == 1);
  // the alternative reading halves delta once
  CHECK(count_u_special(parts(3, 6, 3, 6), DeltaReading::literal) == 1);
  CHECK(count_u_special(parts(3, 6, 3, 6), DeltaReading::single_halving) == 3);
  for (long a0 = 0; a0 <= 6; ++a0)
    for (long a2 = 0; a2 <= 6; ++a2)
      for (long a1 = 0; a1 <= 4; ++a1)
        for (long a3 = 1; a3 <= 4; ++a3) {
          CHECK(count_u_special(parts(a0, a1, a2, a3)) == count_u_special(parts(a2, a1, a0, a3)));
          CHECK(count_u_special(parts(a0, a1, a2, a3)) ==
                count_u_special(parts(a0 + a2, a1, 0, a3)));
          CHECK(lower_bound(parts(a0, a1, a2, a3)) >= 0);
        }
}

TEST_CASE("existence_witness examples") {
  CHECK(to_string(existence_witness(parts(1, 0, 1, 1))) == "nabla+E0+Dj(0)");
  const auto xb = existence_witness(parts(0, 2, 0, 1));
  CHECK(xb.family == Family::Xbar);
  CHECK(xb.mu + xb.nu == 4);
  CHECK(existence_witness(parts(0, 0, 0, 1)) == net(Family::X, 0, 0, 0, 0, 0, 0, 0));
}

TEST_CASE("existence_witness realizes every parts tuple up to 8") {
  for (long a0 = 0; a0 <= 8; ++a0)
    for (long a1 = 0; a1 <= 8; ++a1)
      for (long a2 = 0; a2 <= 8; ++a2)
        for (long a3 = 1; a3 <= 8; ++a3) {
          const IntegerParts p = parts(a0, a1, a2, a3);
          const NetDescriptor w = existence_witness(p);
          if (!validate(w).empty() || integer_parts(w) != p) FAIL_CHECK(p.str() << " -> " << to_string(w));
        }
}

TEST_CASE("reflection is an involution on enumerated nets") {
  for (long a0 = 0; a0 <= 3; ++a0)
    for (long a1 = 0; a1 <= 4; ++a1)
      for (long a2 = 0; a2 <= 3; ++a2)
        for (long a3 = 1; a3 <= 4; ++a3) {
          const IntegerParts p = parts(a0, a1, a2, a3);
          const auto nets = enumerate_nets(p);
          std::set<NetDescriptor> mirrored;
          for (const auto& n : nets) {
            const NetDescriptor r = reflect(n);
            CHECK(reflect(r) == n);
            CHECK(integer_parts(r) == reflect(p));
            mirrored.insert(canonicalize(r));
          }
          const auto other = enumerate_nets(reflect(p));
          CHECK(mirrored == std::set<NetDescriptor>(other.begin(), other.end()));
          for (const auto& t : enumerate_junctions(p)) {
            CHECK(reflect(reflect(t)) == t);
            CHECK(integer_parts(reflect(t)) == reflect(p));
          }
        }
}

TEST_CASE("text form round trips") {
  CHECK(to_string(net(Family::U, 1, 1, 1, 0, 0, 0, 0)) == "U[1,1]^1");
  CHECK(to_string(net(Family::NablaE, 1, 0, 0, 1, 0, 0, 0, 2)) == "nabla+E1+Dj(2)+D(i=1,k=0,l=0,m=0)");
  CHECK(parse_net("U[1,1]^1+D(i=0,k=0,l=0,m=0)") == net(Family::U, 1, 1, 1, 0, 0, 0, 0));
  for (long a1 = 0; a1 <= 4; ++a1)
    for (long a3 = 1; a3 <= 4; ++a3) {
      for (const auto& n : enumerate_nets(parts(1, a1, 2, a3))) CHECK(parse_net(to_string(n)) == n);
      for (const auto& t : enumerate_junctions(parts(1, a1, 2, a3))) CHECK(parse_junction(to_string(t)) == t);
    }
  CHECK_THROWS_AS((void)parse_net("Q[1,1]"), ParseError);
  CHECK_THROWS_AS((void)parse_net("U[1,1]^"), ParseError);
  CHECK_THROWS_AS((void)parse_junction("T1+Q1"), ParseError);
  CHECK_THROWS_AS((void)IntegerParts::parse("1,2,3"), ParseError);
  CHECK_THROWS_AS((void)IntegerParts::parse("1,2,3,0"), DomainError);
  CHECK(IntegerParts::parse("1,4,0,4") == parts(1, 4, 0, 4));
}
