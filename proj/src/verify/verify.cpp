/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sphquad/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sphquad/error.hpp"
#include "sphquad/sturm.hpp"

namespace sphquad::verify {

const char* to_string(Position p) {
  switch (p) {
    case Position::negative: return "negative";
    case Position::unit: return "unit";
    case Position::above: return "above";
  }
  return "unit";
}

Position position_of(const Rational& a) {
  if (a.is_zero() || a == Rational(1)) throw DomainError("a must differ from 0 and 1");
  if (a.sign() < 0) return Position::negative;
  return a < Rational(1) ? Position::unit : Position::above;
}

Position parse_position(const std::string& text) {
  if (text == "negative") return Position::negative;
  if (text == "unit") return Position::unit;
  if (text == "above") return Position::above;
  throw ParseError("position must be negative, unit or above");
}

CornerAssignment correspondence(Position p) {
  switch (p) {
    case Position::unit: return {HeunCorner::a, HeunCorner::one, HeunCorner::inf};
    case Position::negative: return {HeunCorner::one, HeunCorner::inf, HeunCorner::a};
    case Position::above: return {HeunCorner::one, HeunCorner::a, HeunCorner::inf};
  }
  throw InvariantError("unknown position");
}

nets::IntegerParts parts_from_assignment(const heun::HeunAngles& angles, const CornerAssignment& map) {
  const auto part = [&angles](HeunCorner c) {
    switch (c) {
      case HeunCorner::one: return angles.alpha1().floor_long();
      case HeunCorner::a: return angles.alpha_a().floor_long();
      case HeunCorner::inf: return angles.alpha_inf().floor_long();
    }
    return 0L;
  };
  return {part(map.a0), part(map.a1), part(map.a2), angles.alpha0()};
}

nets::IntegerParts parts_from_heun(const heun::HeunAngles& angles, Position position) {
  return parts_from_assignment(angles, correspondence(position));
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.passed(); }));
}

std::size_t VerifyReport::inconclusive() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.inconclusive; }));
}

VerifyReport cross_validate(const heun::HeunAngles& angles, const std::vector<Rational>& samples,
                            const heun::SigmaOptions& sigma) {
  VerifyReport rep;
  rep.angles = std::to_string(angles.alpha0()) + "," + angles.alpha1().str() + "," +
               angles.alpha_a().str() + "," + angles.alpha_inf().str();
  const auto unit = heun::unitarizable_generic(angles, sigma);
  rep.sigma = unit.sigma.decimal;
  const long n0 = angles.alpha0();
  for (const Rational& a : samples) {
    const heun::HeunParams params(angles, a);
    VerifyRow row;
    row.a = a;
    row.position = position_of(a);
    row.alpha0 = n0;
    row.parts = parts_from_heun(angles, row.position);
    const Poly g = heun::accessory_polynomial(params);
    row.real_distinct = count_real_roots(g);
    row.real_with_multiplicity = count_real_roots_with_multiplicity(g);
    const auto pb = heun::pontryagin_bound(params);
    row.pontryagin_defined = pb.defined;
    if (pb.defined) row.pontryagin_lb = pb.real_lower_bound(n0);
    row.combinatorial_lb = nets::lower_bound(row.parts);
    row.unitarizable = unit.verdict;

    const long count = static_cast<long>(row.real_with_multiplicity);
    row.upper_ok = count <= n0;
    row.parity_ok = (count - n0) % 2 == 0;
    row.pontryagin_ok = !pb.defined || row.pontryagin_lb <= count;
    row.combinatorial_ok = unit.verdict != heun::Unitarizable::yes || row.combinatorial_lb <= count;
    row.inconclusive = unit.verdict == heun::Unitarizable::boundary;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<Rational> sample_grid(Position p, std::size_t n) {
  std::vector<Rational> out;
  const long top = static_cast<long>(n) + 1;
  for (long idx = 1; idx <= static_cast<long>(n); ++idx) {
    switch (p) {
      case Position::unit: out.emplace_back(idx, top); break;
      case Position::negative: out.emplace_back(-idx, top - idx); break;
      case Position::above: out.emplace_back(top, idx); break;
    }
  }
  return out;
}

std::vector<heun::HeunAngles> default_angle_grid() {
  std::set<Rational> pool_set;
  for (long q : {2L, 3L, 4L, 5L, 10L})
    for (long p = 1; p < 2 * q; ++p)
      if (p % q != 0) pool_set.insert(Rational(p, q));
  const std::vector<Rational> pool(pool_set.begin(), pool_set.end());

  std::mt19937 rng(20260214u);
  std::vector<heun::HeunAngles> out;
  for (long n0 = 2; n0 <= 6; ++n0) {
    std::set<std::vector<Rational>> taken;
    int found = 0;
    while (found < 5) {
      std::vector<Rational> t;
      for (int c = 0; c < 3; ++c) t.push_back(pool[rng() % pool.size()]);
      if (!taken.insert(t).second) continue;
      heun::HeunAngles ang(n0, t[0], t[1], t[2]);
      if (heun::unitarizable_generic(ang).verdict != heun::Unitarizable::yes) continue;
      out.push_back(ang);
      ++found;
    }
  }
  return out;
}

std::string to_jsonl(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& r : report.rows) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["angles"] = report.angles;
    j["a"] = r.a.str();
    j["position"] = to_string(r.position);
    j["alpha0"] = r.alpha0;
    j["parts"] = {r.parts.A0, r.parts.A1, r.parts.A2, r.parts.A3};
    j["real_distinct"] = r.real_distinct;
    j["real_with_multiplicity"] = r.real_with_multiplicity;
    j["pontryagin_lb"] = r.pontryagin_defined ? nlohmann::ordered_json(r.pontryagin_lb) : nullptr;
    j["combinatorial_lb"] = r.combinatorial_lb;
    j["unitarizable"] = heun::to_string(r.unitarizable);
    j["sigma"] = report.sigma;
    j["upper_ok"] = r.upper_ok;
    j["parity_ok"] = r.parity_ok;
    j["combinatorial_ok"] = r.combinatorial_ok;
    j["pontryagin_ok"] = r.pontryagin_ok;
    j["inconclusive"] = r.inconclusive;
    j["pass"] = r.passed();
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string summary_table(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "angles" << std::right << std::setw(9) << "samples"
     << std::setw(8) << "min_re" << std::setw(8) << "max_re" << std::setw(8) << "comb_lb"
     << std::setw(8) << "fail" << std::setw(8) << "incon" << '\n';
  std::size_t total = 0, fails = 0, incon = 0;
  for (const auto& rep : reports) {
    std::size_t lo = 0, hi = 0;
    long lb_max = 0;
    if (!rep.rows.empty()) {
      lo = rep.rows.front().real_with_multiplicity;
      hi = lo;
    }
    for (const auto& r : rep.rows) {
      lo = std::min(lo, r.real_with_multiplicity);
      hi = std::max(hi, r.real_with_multiplicity);
      lb_max = std::max(lb_max, r.combinatorial_lb);
    }
    os << std::left << std::setw(28) << rep.angles << std::right << std::setw(9) << rep.rows.size()
       << std::setw(8) << lo << std::setw(8) << hi << std::setw(8) << lb_max << std::setw(8)
       << rep.failures() << std::setw(8) << rep.inconclusive() << '\n';
    total += rep.rows.size();
    fails += rep.failures();
    incon += rep.inconclusive();
  }
  os << "total " << total << " samples, " << fails << " failures, " << incon << " inconclusive\n";
  return os.str();
}

LimitCheck limit_check(const heun::HeunAngles& angles, const Rational& a,
                       const Rational& tolerance_factor) {
  LimitCheck out;
  const Poly g = heun::accessory_polynomial(heun::HeunParams(angles, a));
  const auto n0 = static_cast<std::size_t>(angles.alpha0());
  out.all_real = count_real_roots(g) == n0 && count_real_roots_with_multiplicity(g) == n0;
  if (!out.all_real) return out;

  const Rational tol = tolerance_factor * a.abs();
  auto limits = heun::limit_spectrum_a0(angles);
  std::sort(limits.begin(), limits.end());
  const auto iv = isolate_real_roots(g, tol / Rational(4));
  out.within_tolerance = iv.size() == limits.size();
  for (std::size_t t = 0; t < iv.size() && t < limits.size(); ++t) {
    if (iv[t].lo < limits[t] - tol || iv[t].hi > limits[t] + tol) out.within_tolerance = false;
    const Rational dev = std::max((iv[t].lo - limits[t]).abs(), (iv[t].hi - limits[t]).abs());
    out.max_scaled_deviation = std::max(out.max_scaled_deviation, (dev / a.abs()).to_double());
  }
  return out;
}

}  // namespace sphquad::verify
