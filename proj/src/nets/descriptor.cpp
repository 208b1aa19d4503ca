/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>
#include <set>
#include <sstream>

#include "sphquad/error.hpp"
#include "sphquad/nets.hpp"

namespace sphquad::nets {

const char* family_name(Family f) {
  switch (f) {
    case Family::X: return "X";
    case Family::Xbar: return "Xbar";
    case Family::U: return "U";
    case Family::Ubar: return "Ubar";
    case Family::V: return "V";
    case Family::Vbar: return "Vbar";
    case Family::Z: return "Z";
    case Family::R: return "R";
    case Family::Rbar: return "Rbar";
    case Family::NablaE: return "nabla+E";
    case Family::NablaM: return "nabla+M";
    case Family::NablaMbar: return "nabla+Mbar";
  }
  return "?";
}

bool is_nabla(Family f) {
  return f == Family::NablaE || f == Family::NablaM || f == Family::NablaMbar;
}

std::string IntegerParts::str() const {
  std::ostringstream os;
  os << A0 << ',' << A1 << ',' << A2 << ',' << A3;
  return os.str();
}

IntegerParts IntegerParts::parse(std::string_view text) {
  std::array<long, 4> v{};
  std::size_t pos = 0;
  for (std::size_t idx = 0; idx < 4; ++idx) {
    if (idx > 0) {
      if (pos >= text.size() || text[pos] != ',') throw ParseError("parts must be A0,A1,A2,A3");
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start || pos - start > 9) throw ParseError("parts must be A0,A1,A2,A3");
    v[idx] = std::stol(std::string(text.substr(start, pos - start)));
  }
  if (pos != text.size()) throw ParseError("parts must be A0,A1,A2,A3");
  if (v[3] < 1) throw DomainError("A3 must be at least 1");
  return {v[0], v[1], v[2], v[3]};
}

IntegerParts reflect(const IntegerParts& p) { return {p.A2, p.A1, p.A0, p.A3}; }

namespace {

IntegerParts decorate(long b0, long b1, long b2, long b3, long kappa, long i, long k, long l,
                      long m) {
  return {b0 + i + m, b1 + 2 * kappa + i + k, b2 + k + l, b3 + 2 * kappa + l + m};
}

std::vector<std::string> validate_exact(const NetDescriptor& n) {
  std::vector<std::string> out;
  const auto need = [&out](bool ok, const char* msg) {
    if (!ok) out.emplace_back(msg);
  };
  if (std::min({n.mu, n.nu, n.kappa, n.j, n.i, n.k, n.l, n.m}) < 0) {
    out.emplace_back("negative index");
    return out;
  }
  const long mu = n.mu, nu = n.nu;
  if (!is_nabla(n.family)) need(n.j == 0, "inserted digon index only applies to nabla unions");
  switch (n.family) {
    case Family::X:
      need(n.i == 0 || mu <= 1, "X: i>0 needs mu<=1");
      need(n.k == 0 || nu <= 1, "X: k>0 needs nu<=1");
      break;
    case Family::Xbar:
      need(mu + nu >= 2 && (mu + nu) % 2 == 0, "Xbar: mu+nu must be even and >= 2");
      need(n.m == 0 || mu <= 3, "Xbar: m>0 needs mu<=3");
      need(n.l == 0 || nu <= 3, "Xbar: l>0 needs nu<=3");
      break;
    case Family::R:
      need(mu > 0, "R: mu must be positive");
      need(n.kappa == 0, "R: no pseudo-diagonals");
      need(n.k == 0 || (mu == 1 && nu == 0), "R: k>0 needs mu=1 and nu=0");
      break;
    case Family::Rbar:
      need(nu > 0, "Rbar: nu must be positive");
      need(n.kappa == 0, "Rbar: no pseudo-diagonals");
      need(n.i == 0 || (mu == 0 && nu == 1), "Rbar: i>0 needs mu=0 and nu=1");
      break;
    case Family::U:
      need(mu > 0 && nu > 0, "U: mu and nu must be positive");
      need(n.i == 0 || mu == 1, "U: i>0 needs mu=1");
      need(n.l == 0 || nu == 1, "U: l>0 needs nu=1");
      break;
    case Family::Ubar:
      need(mu > 0 && nu > 0, "Ubar: mu and nu must be positive");
      need(n.m == 0 || mu == 1, "Ubar: m>0 needs mu=1");
      need(n.k == 0 || nu == 1, "Ubar: k>0 needs nu=1");
      break;
    case Family::V:
      need(mu > 0 && nu > 0, "V: mu and nu must be positive");
      need(n.i == 0 || mu == 1, "V: i>0 needs mu=1");
      need(n.l == 0 || nu <= 2, "V: l>0 needs nu<=2");
      break;
    case Family::Vbar:
      need(mu > 0 && nu > 0, "Vbar: mu and nu must be positive");
      need(n.m == 0 || mu <= 2, "Vbar: m>0 needs mu<=2");
      need(n.k == 0 || nu == 1, "Vbar: k>0 needs nu=1");
      break;
    case Family::Z:
      need(mu > 0 && nu > 0, "Z: mu and nu must be positive");
      need(n.i == 0 || mu == 1, "Z: i>0 needs mu=1");
      need(n.k == 0 || nu == 1, "Z: k>0 needs nu=1");
      break;
    case Family::NablaE:
    case Family::NablaM:
    case Family::NablaMbar:
      need(n.kappa == 0, "nabla union: no pseudo-diagonals");
      need(nu == 0, "nabla union: nu unused");
      if (n.family == Family::NablaE) {
        need(mu <= 1, "nabla+E_n: n must be 0 or 1");
      } else if (n.family == Family::NablaM) {
        need(mu >= 1, "nabla+M_n: n must be positive");
        need(mu <= 1 || n.k == 0, "nabla+M_n: n>1 needs k=0");
      } else {
        need(mu >= 1, "nabla+Mbar_n: n must be positive");
        need(mu <= 1 || n.i == 0, "nabla+Mbar_n: n>1 needs i=0");
      }
      break;
  }
  return out;
}

IntegerParts parts_exact(const NetDescriptor& n) {
  long b0 = 0, b1 = 0, b2 = 0, b3 = 1;
  const long mu = n.mu, nu = n.nu;
  switch (n.family) {
    case Family::X: b3 = mu + nu + 1; break;
    case Family::Xbar: b1 = (mu + nu) / 2; break;
    case Family::R: b0 = mu; b3 = nu + 1; break;
    case Family::Rbar: b2 = nu; b3 = mu + 1; break;
    case Family::U:
    case Family::V: b1 = nu; b3 = mu + 1; break;
    case Family::Ubar:
    case Family::Vbar: b1 = mu; b3 = nu + 1; break;
    case Family::Z: b1 = 1; b3 = mu + nu + 1; break;
    case Family::NablaE: b0 = n.j + 1; b1 = mu; b2 = n.j + 1; break;
    case Family::NablaM: b0 = n.j + 1 + mu; b2 = n.j + 1; break;
    case Family::NablaMbar: b0 = n.j + 1; b2 = n.j + 1 + mu; break;
  }
  return decorate(b0, b1, b2, b3, n.kappa, n.i, n.k, n.l, n.m);
}

NetDescriptor with_family(const NetDescriptor& n, Family f, long mu, long nu) {
  NetDescriptor out = n;
  out.family = f;
  out.mu = mu;
  out.nu = nu;
  return out;
}

}  // namespace

NetDescriptor normalize(const NetDescriptor& n) {
  switch (n.family) {
    case Family::U:
      if (n.nu == 0) return with_family(n, Family::X, n.mu, 0);
      if (n.mu == 0) return with_family(n, Family::Xbar, 0, 2 * n.nu);
      break;
    case Family::Ubar:
      if (n.mu == 0) return with_family(n, Family::X, 0, n.nu);
      if (n.nu == 0) return with_family(n, Family::Xbar, 2 * n.mu, 0);
      break;
    case Family::V:
      if (n.mu == 0 && n.nu >= 1) return with_family(n, Family::Xbar, 1, 2 * n.nu - 1);
      break;
    case Family::Vbar:
      if (n.nu == 0 && n.mu >= 1) return with_family(n, Family::Xbar, 2 * n.mu - 1, 1);
      break;
    case Family::Xbar:
      if (n.mu == 0 && n.nu == 0) return with_family(n, Family::X, 0, 0);
      break;
    default:
      break;
  }
  return n;
}

std::vector<std::string> validate(const NetDescriptor& net) {
  return validate_exact(normalize(net));
}

IntegerParts integer_parts(const NetDescriptor& net) {
  const NetDescriptor n = normalize(net);
  const auto v = validate_exact(n);
  if (!v.empty()) throw DomainError("invalid net " + to_string(net) + ": " + v.front());
  return parts_exact(n);
}

namespace {

// One-step equivalence moves between reducible nets, both directions.
std::vector<NetDescriptor> moves(const NetDescriptor& x) {
  std::vector<NetDescriptor> out;
  const long mu = x.mu, nu = x.nu;
  const auto add = [&out, &x](Family f, long a, long b, long di, long dk, long dl, long dm,
                              long dj = 0) {
    NetDescriptor y = x;
    y.family = f;
    y.mu = a;
    y.nu = b;
    y.j += dj;
    y.i += di;
    y.k += dk;
    y.l += dl;
    y.m += dm;
    y = normalize(y);
    if (validate_exact(y).empty()) out.push_back(y);
  };
  switch (x.family) {
    case Family::X:
      if (nu == 1 && x.k > 0) add(Family::U, mu, 1, 0, -1, 1, 0);
      if (mu == 1 && x.i > 0) add(Family::Ubar, 1, nu, -1, 0, 0, 1);
      break;
    case Family::Xbar:
      if (nu == 2 && mu % 2 == 0 && x.l > 0) add(Family::Ubar, mu / 2, 1, 0, 1, -1, 0);
      if (mu == 2 && nu % 2 == 0 && x.m > 0) add(Family::U, 1, nu / 2, 1, 0, 0, -1);
      if (nu == 3 && mu % 2 == 1 && x.l > 0) add(Family::Vbar, (mu + 1) / 2, 1, 0, 1, -1, 0);
      if (mu == 3 && nu % 2 == 1 && x.m > 0) add(Family::V, 1, (nu + 1) / 2, 1, 0, 0, -1);
      break;
    case Family::Z:
      if (nu == 1 && x.k > 0) add(Family::V, mu, 2, 0, -1, 1, 0);
      if (mu == 1 && x.i > 0) add(Family::Vbar, 2, nu, -1, 0, 0, 1);
      break;
    case Family::U:
      if (nu == 1 && x.l > 0) add(Family::X, mu, 1, 0, 1, -1, 0);
      if (mu == 1 && x.i > 0) add(Family::Xbar, 2, 2 * nu, -1, 0, 0, 1);
      break;
    case Family::Ubar:
      if (mu == 1 && x.m > 0) add(Family::X, 1, nu, 1, 0, 0, -1);
      if (nu == 1 && x.k > 0) add(Family::Xbar, 2 * mu, 2, 0, -1, 1, 0);
      break;
    case Family::V:
      if (mu == 1 && x.i > 0) add(Family::Xbar, 3, 2 * nu - 1, -1, 0, 0, 1);
      if (nu == 2 && x.l > 0) add(Family::Z, mu, 1, 0, 1, -1, 0);
      break;
    case Family::Vbar:
      if (nu == 1 && x.k > 0) add(Family::Xbar, 2 * mu - 1, 3, 0, -1, 1, 0);
      if (mu == 2 && x.m > 0) add(Family::Z, 1, nu, 1, 0, 0, -1);
      break;
    case Family::NablaE:
      if (mu == 1 && x.j > 0) {
        add(Family::NablaM, 1, 0, 0, 1, 0, 0, -1);
        add(Family::NablaMbar, 1, 0, 1, 0, 0, 0, -1);
      }
      if (mu == 1 && x.j == 0) {
        add(Family::R, 1, 0, 0, 1, 0, 0);
        add(Family::Rbar, 0, 1, 1, 0, 0, 0);
      }
      break;
    case Family::NablaM:
      if (mu == 1 && x.k > 0) add(Family::NablaE, 1, 0, 0, -1, 0, 0, 1);
      break;
    case Family::NablaMbar:
      if (mu == 1 && x.i > 0) add(Family::NablaE, 1, 0, -1, 0, 0, 0, 1);
      break;
    case Family::R:
      if (mu == 1 && nu == 0 && x.k > 0) add(Family::NablaE, 1, 0, 0, -1, 0, 0);
      break;
    case Family::Rbar:
      if (mu == 0 && nu == 1 && x.i > 0) add(Family::NablaE, 1, 0, -1, 0, 0, 0);
      break;
  }
  return out;
}

}  // namespace

std::vector<NetDescriptor> equivalence_class(const NetDescriptor& net) {
  const NetDescriptor start = normalize(net);
  const auto v = validate_exact(start);
  if (!v.empty()) throw DomainError("invalid net " + to_string(net) + ": " + v.front());
  const IntegerParts p = parts_exact(start);
  std::set<NetDescriptor> seen{start};
  std::vector<NetDescriptor> stack{start};
  while (!stack.empty()) {
    const NetDescriptor x = stack.back();
    stack.pop_back();
    for (const auto& y : moves(x)) {
      if (parts_exact(y) != p) throw InvariantError("equivalence move changed parts at " + to_string(x));
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

NetDescriptor canonicalize(const NetDescriptor& net) { return equivalence_class(net).front(); }

NetDescriptor reflect(const NetDescriptor& net) {
  NetDescriptor r = net;
  std::swap(r.i, r.k);
  std::swap(r.l, r.m);
  switch (net.family) {
    case Family::X:
    case Family::Xbar:
    case Family::Z: std::swap(r.mu, r.nu); break;
    case Family::R: r.family = Family::Rbar; std::swap(r.mu, r.nu); break;
    case Family::Rbar: r.family = Family::R; std::swap(r.mu, r.nu); break;
    case Family::U: r.family = Family::Ubar; std::swap(r.mu, r.nu); break;
    case Family::Ubar: r.family = Family::U; std::swap(r.mu, r.nu); break;
    case Family::V: r.family = Family::Vbar; std::swap(r.mu, r.nu); break;
    case Family::Vbar: r.family = Family::V; std::swap(r.mu, r.nu); break;
    case Family::NablaE: break;
    case Family::NablaM: r.family = Family::NablaMbar; break;
    case Family::NablaMbar: r.family = Family::NablaM; break;
  }
  return r;
}

// ---- junctions -------------------------------------------------------------

std::vector<std::string> validate(const Junction& t) {
  std::vector<std::string> out;
  const auto need = [&out](bool ok, const char* msg) {
    if (!ok) out.emplace_back(msg);
  };
  if (std::min({t.j, t.n, t.kappa, t.i, t.k, t.l, t.m}) < 0) {
    out.emplace_back("negative index");
    return out;
  }
  switch (t.kind) {
    case JunctionKind::TE:
      need(t.j >= 1, "T_j+E_n: j must be positive");
      need(t.j <= 1 || t.m == 0, "T_j+E_n: m=0 if j>1");
      need(t.n <= 1 || t.l == 0, "T_j+E_n: l=0 if n>1");
      break;
    case JunctionKind::TM:
      need(t.j >= 1 && t.n >= 1, "T_j+M_n: j and n must be positive");
      need(t.j <= 1 || t.m == 0, "T_j+M_n: m=0 if j>1");
      need(t.n <= 1 || t.k == 0, "T_j+M_n: k=0 if n>1");
      break;
    case JunctionKind::ET:
      need(t.n >= 1, "E_j+T_n: n must be positive");
      need(t.j <= 1 || t.m == 0, "E_j+T_n: m=0 if j>1");
      need(t.n <= 1 || t.l == 0, "E_j+T_n: l=0 if n>1");
      break;
    case JunctionKind::MbarT:
      need(t.j >= 1 && t.n >= 1, "Mbar_j+T_n: j and n must be positive");
      need(t.j <= 1 || t.i == 0, "Mbar_j+T_n: i=0 if j>1");
      need(t.n <= 1 || t.l == 0, "Mbar_j+T_n: l=0 if n>1");
      break;
  }
  return out;
}

IntegerParts integer_parts(const Junction& t) {
  const auto v = validate(t);
  if (!v.empty()) throw DomainError("invalid junction " + to_string(t) + ": " + v.front());
  long b1 = 0, b3 = 1;
  switch (t.kind) {
    case JunctionKind::TE:
    case JunctionKind::ET: b1 = t.j + t.n; break;
    case JunctionKind::TM: b1 = t.j; b3 = t.n + 1; break;
    case JunctionKind::MbarT: b1 = t.n; b3 = t.j + 1; break;
  }
  return decorate(0, b1, 0, b3, t.kappa, t.i, t.k, t.l, t.m);
}

Junction canonicalize(const Junction& t) {
  const auto v = validate(t);
  if (!v.empty()) throw DomainError("invalid junction " + to_string(t) + ": " + v.front());
  Junction alt = t;
  if (t.kind == JunctionKind::MbarT && t.j == 1 && t.i > 0) {
    alt.kind = JunctionKind::ET;
    alt.i -= 1;
    alt.m += 1;
  } else if (t.kind == JunctionKind::ET && t.j == 1 && t.m > 0) {
    alt.kind = JunctionKind::MbarT;
    alt.i += 1;
    alt.m -= 1;
  } else if (t.kind == JunctionKind::TM && t.n == 1 && t.k > 0) {
    alt.kind = JunctionKind::TE;
    alt.k -= 1;
    alt.l += 1;
  } else if (t.kind == JunctionKind::TE && t.n == 1 && t.l > 0) {
    alt.kind = JunctionKind::TM;
    alt.k += 1;
    alt.l -= 1;
  }
  if (!validate(alt).empty()) return t;
  return std::min(t, alt);
}

Junction reflect(const Junction& t) {
  Junction r = t;
  std::swap(r.i, r.k);
  std::swap(r.l, r.m);
  std::swap(r.j, r.n);
  switch (t.kind) {
    case JunctionKind::TE: r.kind = JunctionKind::ET; break;
    case JunctionKind::ET: r.kind = JunctionKind::TE; break;
    case JunctionKind::TM: r.kind = JunctionKind::MbarT; break;
    case JunctionKind::MbarT: r.kind = JunctionKind::TM; break;
  }
  return r;
}

std::pair<NetDescriptor, NetDescriptor> adjacency(const Junction& t) {
  const auto v = validate(t);
  if (!v.empty()) throw DomainError("invalid junction " + to_string(t) + ": " + v.front());
  const auto make = [&t](Family f, long mu, long nu) {
    NetDescriptor n;
    n.family = f;
    n.mu = mu;
    n.nu = nu;
    n.kappa = t.kappa;
    n.i = t.i;
    n.k = t.k;
    n.l = t.l;
    n.m = t.m;
    return normalize(n);
  };
  switch (t.kind) {
    case JunctionKind::TE:
      return {make(Family::Xbar, 2 * t.j, 2 * t.n), make(Family::Xbar, 2 * t.j - 1, 2 * t.n + 1)};
    case JunctionKind::TM:
      return {make(Family::Ubar, t.j, t.n), make(Family::Vbar, t.j, t.n)};
    case JunctionKind::ET:
      return {make(Family::Xbar, 2 * t.j + 1, 2 * t.n - 1), make(Family::Xbar, 2 * t.j, 2 * t.n)};
    case JunctionKind::MbarT:
      return {make(Family::U, t.j, t.n), make(Family::V, t.j, t.n)};
  }
  throw InvariantError("unknown junction kind");
}

}  // namespace sphquad::nets
