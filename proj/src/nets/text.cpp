/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <regex>
#include <sstream>

#include "sphquad/error.hpp"
#include "sphquad/nets.hpp"

namespace sphquad::nets {

namespace {

void write_tail(std::ostream& os, long kappa, long i, long k, long l, long m) {
  if (kappa != 0) os << '^' << kappa;
  if (i != 0 || k != 0 || l != 0 || m != 0)
    os << "+D(i=" << i << ",k=" << k << ",l=" << l << ",m=" << m << ')';
}

long to_long(const std::ssub_match& s) {
  if (!s.matched) return 0;
  const std::string t = s.str();
  if (t.size() > 9) throw ParseError("index too large: " + t);
  return std::stol(t);
}

const std::string kTail = R"((?:\^(\d+))?(?:\+D\(i=(\d+),k=(\d+),l=(\d+),m=(\d+)\))?)";

}  // namespace

std::string to_string(const NetDescriptor& n) {
  std::ostringstream os;
  switch (n.family) {
    case Family::NablaE: os << "nabla+E" << n.mu << "+Dj(" << n.j << ')'; break;
    case Family::NablaM: os << "nabla+M" << n.mu << "+Dj(" << n.j << ')'; break;
    case Family::NablaMbar: os << "nabla+Mbar" << n.mu << "+Dj(" << n.j << ')'; break;
    default: os << family_name(n.family) << '[' << n.mu << ',' << n.nu << ']'; break;
  }
  write_tail(os, n.kappa, n.i, n.k, n.l, n.m);
  return os.str();
}

std::string to_string(const Junction& t) {
  std::ostringstream os;
  switch (t.kind) {
    case JunctionKind::TE: os << 'T' << t.j << "+E" << t.n; break;
    case JunctionKind::TM: os << 'T' << t.j << "+M" << t.n; break;
    case JunctionKind::ET: os << 'E' << t.j << "+T" << t.n; break;
    case JunctionKind::MbarT: os << "Mbar" << t.j << "+T" << t.n; break;
  }
  write_tail(os, t.kappa, t.i, t.k, t.l, t.m);
  return os.str();
}

NetDescriptor parse_net(std::string_view text) {
  static const std::regex primitive(R"(^(X|Xbar|R|Rbar|U|Ubar|V|Vbar|Z)\[(\d+),(\d+)\])" + kTail + "$");
  static const std::regex nabla(R"(^nabla\+(E|M|Mbar)(\d+)\+Dj\((\d+)\))" + kTail + "$");
  const std::string s(text);
  std::smatch mt;
  NetDescriptor n;
  if (std::regex_match(s, mt, primitive)) {
    static const std::pair<const char*, Family> names[] = {
        {"X", Family::X},       {"Xbar", Family::Xbar}, {"R", Family::R},
        {"Rbar", Family::Rbar}, {"U", Family::U},       {"Ubar", Family::Ubar},
        {"V", Family::V},       {"Vbar", Family::Vbar}, {"Z", Family::Z}};
    for (const auto& [name, fam] : names)
      if (mt[1].str() == name) n.family = fam;
    n.mu = to_long(mt[2]);
    n.nu = to_long(mt[3]);
  } else if (std::regex_match(s, mt, nabla)) {
    const std::string tri = mt[1].str();
    n.family = tri == "E" ? Family::NablaE : (tri == "M" ? Family::NablaM : Family::NablaMbar);
    n.mu = to_long(mt[2]);
    n.j = to_long(mt[3]);
  } else {
    throw ParseError("cannot parse net: " + s);
  }
  n.kappa = to_long(mt[4]);
  n.i = to_long(mt[5]);
  n.k = to_long(mt[6]);
  n.l = to_long(mt[7]);
  n.m = to_long(mt[8]);
  return n;
}

Junction parse_junction(std::string_view text) {
  static const std::regex left(R"(^T(\d+)\+(E|M)(\d+))" + kTail + "$");
  static const std::regex right(R"(^(E|Mbar)(\d+)\+T(\d+))" + kTail + "$");
  const std::string s(text);
  std::smatch mt;
  Junction t;
  if (std::regex_match(s, mt, left)) {
    t.kind = mt[2].str() == "E" ? JunctionKind::TE : JunctionKind::TM;
    t.j = to_long(mt[1]);
    t.n = to_long(mt[3]);
  } else if (std::regex_match(s, mt, right)) {
    t.kind = mt[1].str() == "E" ? JunctionKind::ET : JunctionKind::MbarT;
    t.j = to_long(mt[2]);
    t.n = to_long(mt[3]);
  } else {
    throw ParseError("cannot parse junction: " + s);
  }
  t.kappa = to_long(mt[4]);
  t.i = to_long(mt[5]);
  t.k = to_long(mt[6]);
  t.l = to_long(mt[7]);
  t.m = to_long(mt[8]);
  return t;
}

}  // namespace sphquad::nets
