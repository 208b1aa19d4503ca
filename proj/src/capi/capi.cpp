/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sphquad/sphquad.h"

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sphquad/error.hpp"
#include "sphquad/heun.hpp"
#include "sphquad/nets.hpp"
#include "sphquad/sturm.hpp"
#include "sphquad/verify.hpp"

using namespace sphquad;

struct sq_strings {
  std::vector<std::string> items;
};

struct sq_params {
  heun::HeunAngles angles;
  std::optional<Rational> a;
};

struct sq_poly {
  Poly poly;
  std::vector<std::string> coeffs;
  std::string text;
};

struct sq_intervals {
  std::vector<std::string> lo, hi;
  std::vector<double> mid;
};

struct sq_sigma {
  heun::SigmaValue value;
  std::string verdict;
};

struct sq_chainlist {
  struct Entry {
    std::string kind;
    std::vector<std::string> nets, junctions;
  };
  std::vector<Entry> chains;
  std::vector<std::string> violations;
};

struct sq_report {
  verify::VerifyReport report;
  std::vector<std::string> a_text;
  std::string jsonl;
};

namespace {

thread_local std::string last_error;

sq_status fail(sq_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class Fn>
sq_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return SQ_OK;
  } catch (const ParseError& e) {
    return fail(SQ_ERR_PARSE, e.what());
  } catch (const DomainError& e) {
    return fail(SQ_ERR_DOMAIN, e.what());
  } catch (const InvariantError& e) {
    return fail(SQ_ERR_INVARIANT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SQ_ERR_INTERNAL, "unknown error");
  }
}

// thrown inside guarded() for NULL arguments
struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
const T& need(const T* p, const char* what) {
  if (p == nullptr) throw NullArgument(std::string(what) + " is NULL");
  return *p;
}

void need_out(const void* p) {
  if (p == nullptr) throw NullArgument("output pointer is NULL");
}

Rational parse_rational(const char* s, const char* what) {
  if (s == nullptr) throw NullArgument(std::string(what) + " is NULL");
  return Rational::parse(s);
}

nets::IntegerParts to_cpp(sq_parts p) { return {p.A0, p.A1, p.A2, p.A3}; }
sq_parts to_c(const nets::IntegerParts& p) { return {p.A0, p.A1, p.A2, p.A3}; }

heun::HeunParams with_a(const sq_params& p) {
  if (!p.a) throw DomainError("this operation needs the modulus a");
  return heun::HeunParams(p.angles, *p.a);
}

sq_strings* make_strings(std::vector<std::string> v) { return new sq_strings{std::move(v)}; }

std::vector<std::string> rationals_text(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

bool is_junction_text(const std::string& s) {
  return !s.empty() && (s[0] == 'T' || s.rfind("E", 0) == 0 || s.rfind("Mbar", 0) == 0);
}

sq_poly* make_poly(Poly p) {
  auto* out = new sq_poly{std::move(p), {}, {}};
  out->coeffs = rationals_text(out->poly.coefficients());
  out->text = out->poly.str();
  return out;
}

sq_sigma* make_sigma(heun::SigmaValue v) {
  const char* verdict = v.compare_to_one < 0 ? "yes" : (v.compare_to_one > 0 ? "no" : "boundary");
  return new sq_sigma{std::move(v), verdict};
}

heun::SigmaOptions sigma_options(unsigned digits) {
  heun::SigmaOptions o = heun::default_sigma_options();
  if (digits != 0) o.digits = digits;
  return o;
}

verify::Position to_cpp(sq_position p) {
  switch (p) {
    case SQ_POS_NEGATIVE: return verify::Position::negative;
    case SQ_POS_UNIT: return verify::Position::unit;
    case SQ_POS_ABOVE: return verify::Position::above;
  }
  throw NullArgument("unknown position");
}

verify::HeunCorner to_cpp(sq_corner c) {
  switch (c) {
    case SQ_CORNER_ONE: return verify::HeunCorner::one;
    case SQ_CORNER_A: return verify::HeunCorner::a;
    case SQ_CORNER_INF: return verify::HeunCorner::inf;
  }
  throw NullArgument("unknown corner");
}

}  // namespace

extern "C" {

const char* sq_last_error(void) { return last_error.c_str(); }

const char* sq_status_string(sq_status status) {
  switch (status) {
    case SQ_OK: return "ok";
    case SQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SQ_ERR_PARSE: return "parse error";
    case SQ_ERR_DOMAIN: return "domain error";
    case SQ_ERR_INVARIANT: return "invariant violation";
    case SQ_ERR_UNDEFINED: return "undefined";
    case SQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sq_version(void) { return "1.0.0"; }

size_t sq_strings_size(const sq_strings* list) { return list ? list->items.size() : 0; }

const char* sq_strings_at(const sq_strings* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return list->items[index].c_str();
}

void sq_strings_destroy(sq_strings* list) { delete list; }

sq_status sq_params_create(long alpha0, const char* alpha1, const char* alpha_a,
                           const char* alpha_inf, const char* a, sq_params** out) {
  return guarded([&] {
    need_out(out);
    *out = nullptr;
    heun::HeunAngles ang(alpha0, parse_rational(alpha1, "alpha1"), parse_rational(alpha_a, "alpha_a"),
                         parse_rational(alpha_inf, "alpha_inf"));
    std::optional<Rational> av;
    if (a != nullptr) {
      av = Rational::parse(a);
      (void)heun::HeunParams(ang, *av);  // domain check
    }
    *out = new sq_params{std::move(ang), std::move(av)};
  });
}

void sq_params_destroy(sq_params* params) { delete params; }

sq_status sq_exponent_data(const sq_params* params, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    const auto e = heun::exponent_data(need(params, "params").angles);
    *out = make_strings({e.sum.str(), e.product.str()});
  });
}

sq_status sq_recurrence(const sq_params* params, long n, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    const auto r = heun::recurrence_coefficients(with_a(need(params, "params")), n);
    *out = make_strings({r.r.str(), r.q.str(), r.p.str()});
  });
}

sq_status sq_jacobi_matrix(const sq_params* params, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    const auto j = heun::jacobi_matrix(with_a(need(params, "params")));
    std::vector<std::string> v;
    for (std::size_t r = 0; r < j.dimension(); ++r)
      for (std::size_t c = 0; c < j.dimension(); ++c) v.push_back(j.at(r, c).str());
    *out = make_strings(std::move(v));
  });
}

sq_status sq_limit_spectrum(const sq_params* params, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    *out = make_strings(rationals_text(heun::limit_spectrum_a0(need(params, "params").angles)));
  });
}

sq_status sq_accessory_polynomial(const sq_params* params, sq_poly** out) {
  return guarded([&] {
    need_out(out);
    *out = make_poly(heun::accessory_polynomial(with_a(need(params, "params"))));
  });
}

sq_status sq_poly_from_coefficients(const char* const* coefficients, size_t count, sq_poly** out) {
  return guarded([&] {
    need_out(out);
    if (count > 0 && coefficients == nullptr) throw NullArgument("coefficients is NULL");
    std::vector<Rational> c;
    for (size_t k = 0; k < count; ++k) c.push_back(parse_rational(coefficients[k], "coefficient"));
    *out = make_poly(Poly(std::move(c)));
  });
}

int sq_poly_degree(const sq_poly* poly) { return poly ? poly->poly.degree() : -1; }
size_t sq_poly_size(const sq_poly* poly) { return poly ? poly->coeffs.size() : 0; }

const char* sq_poly_coefficient(const sq_poly* poly, size_t power) {
  if (!poly) return nullptr;
  static const char* const zero = "0";
  return power < poly->coeffs.size() ? poly->coeffs[power].c_str() : zero;
}

const char* sq_poly_text(const sq_poly* poly) { return poly ? poly->text.c_str() : nullptr; }
void sq_poly_destroy(sq_poly* poly) { delete poly; }

sq_status sq_count_real_roots(const sq_poly* poly, const char* lo, const char* hi, size_t* distinct,
                              size_t* with_multiplicity) {
  return guarded([&] {
    const Poly& p = need(poly, "poly").poly;
    Endpoint l, h;
    if (lo) l = Rational::parse(lo);
    if (hi) h = Rational::parse(hi);
    if (distinct) *distinct = count_real_roots(p, l, h);
    if (with_multiplicity) *with_multiplicity = count_real_roots_with_multiplicity(p, l, h);
  });
}

sq_status sq_isolate_real_roots(const sq_poly* poly, const char* width, sq_intervals** out) {
  return guarded([&] {
    need_out(out);
    const auto iv = isolate_real_roots(need(poly, "poly").poly, parse_rational(width, "width"));
    auto* res = new sq_intervals;
    for (const auto& r : iv) {
      res->lo.push_back(r.lo.str());
      res->hi.push_back(r.hi.str());
      res->mid.push_back(((r.lo + r.hi) / Rational(2)).to_double());
    }
    *out = res;
  });
}

size_t sq_intervals_size(const sq_intervals* list) { return list ? list->lo.size() : 0; }

const char* sq_intervals_lo(const sq_intervals* list, size_t index) {
  return list && index < list->lo.size() ? list->lo[index].c_str() : nullptr;
}

const char* sq_intervals_hi(const sq_intervals* list, size_t index) {
  return list && index < list->hi.size() ? list->hi[index].c_str() : nullptr;
}

double sq_intervals_mid(const sq_intervals* list, size_t index) {
  return list && index < list->mid.size() ? list->mid[index] : 0.0;
}

void sq_intervals_destroy(sq_intervals* list) { delete list; }

sq_status sq_pontryagin_bound(const sq_params* params, sq_pontryagin* out, int* signs,
                              size_t capacity, size_t* signs_len) {
  bool undefined = false;
  const sq_status st = guarded([&] {
    need_out(out);
    const heun::HeunParams hp = with_a(need(params, "params"));
    const auto r = heun::pontryagin_bound(hp);
    *out = sq_pontryagin{};
    if (signs_len) *signs_len = r.signs.size();
    if (signs)
      for (size_t t = 0; t < r.signs.size() && t < capacity; ++t) signs[t] = r.signs[t];
    if (!r.defined) {
      undefined = true;
      return;
    }
    out->defined = 1;
    out->positive = r.positive;
    out->negative = r.negative;
    out->max_nonreal_pairs = r.max_nonreal_pairs;
    out->real_lower_bound = r.real_lower_bound(hp.angles().alpha0());
    out->all_real_simple = r.all_real_simple ? 1 : 0;
  });
  if (st == SQ_OK && undefined) return fail(SQ_ERR_UNDEFINED, "signature bound undefined: some p_j vanishes");
  return st;
}

sq_status sq_sigma_invariant(const char* theta, const char* theta1, const char* theta2, long parity,
                             unsigned digits, sq_sigma** out) {
  return guarded([&] {
    need_out(out);
    *out = make_sigma(heun::sigma_invariant(parse_rational(theta, "theta"),
                                            parse_rational(theta1, "theta1"),
                                            parse_rational(theta2, "theta2"), parity,
                                            sigma_options(digits)));
  });
}

sq_status sq_unitarizable(const sq_params* params, unsigned digits, sq_sigma** out) {
  return guarded([&] {
    need_out(out);
    auto r = heun::unitarizable_generic(need(params, "params").angles, sigma_options(digits));
    *out = make_sigma(std::move(r.sigma));
  });
}

const char* sq_sigma_decimal(const sq_sigma* s) { return s ? s->value.decimal.c_str() : nullptr; }
double sq_sigma_approx(const sq_sigma* s) { return s ? s->value.approx : 0.0; }
int sq_sigma_compare_to_one(const sq_sigma* s) { return s ? s->value.compare_to_one : 0; }
const char* sq_sigma_verdict(const sq_sigma* s) { return s ? s->verdict.c_str() : nullptr; }
void sq_sigma_destroy(sq_sigma* s) { delete s; }

int sq_sigma0_parity(const long* nonint_parts, size_t n_nonint, const long* int_angles, size_t n_int) {
  std::vector<long> a, b;
  if (nonint_parts) a.assign(nonint_parts, nonint_parts + n_nonint);
  if (int_angles) b.assign(int_angles, int_angles + n_int);
  return heun::sigma0_parity(a, b);
}

sq_status sq_parts_parse(const char* text, sq_parts* out) {
  return guarded([&] {
    need_out(out);
    if (!text) throw NullArgument("text is NULL");
    *out = to_c(nets::IntegerParts::parse(text));
  });
}

sq_status sq_enumerate_nets(sq_parts parts, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    std::vector<std::string> v;
    for (const auto& n : nets::enumerate_nets(to_cpp(parts))) v.push_back(nets::to_string(n));
    *out = make_strings(std::move(v));
  });
}

sq_status sq_enumerate_junctions(sq_parts parts, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    std::vector<std::string> v;
    for (const auto& t : nets::enumerate_junctions(to_cpp(parts))) v.push_back(nets::to_string(t));
    *out = make_strings(std::move(v));
  });
}

sq_status sq_net_parts(const char* text, sq_parts* out) {
  return guarded([&] {
    need_out(out);
    if (!text) throw NullArgument("text is NULL");
    const std::string s(text);
    *out = to_c(is_junction_text(s) ? nets::integer_parts(nets::parse_junction(s))
                                    : nets::integer_parts(nets::parse_net(s)));
  });
}

sq_status sq_net_validate(const char* text, sq_strings** violations) {
  return guarded([&] {
    need_out(violations);
    if (!text) throw NullArgument("text is NULL");
    const std::string s(text);
    *violations = make_strings(is_junction_text(s) ? nets::validate(nets::parse_junction(s))
                                                   : nets::validate(nets::parse_net(s)));
  });
}

sq_status sq_net_canonicalize(const char* text, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    if (!text) throw NullArgument("text is NULL");
    const std::string s(text);
    *out = make_strings({is_junction_text(s) ? nets::to_string(nets::canonicalize(nets::parse_junction(s)))
                                             : nets::to_string(nets::canonicalize(nets::parse_net(s)))});
  });
}

sq_status sq_net_equivalence_class(const char* text, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    if (!text) throw NullArgument("text is NULL");
    std::vector<std::string> v;
    for (const auto& n : nets::equivalence_class(nets::parse_net(text))) v.push_back(nets::to_string(n));
    *out = make_strings(std::move(v));
  });
}

sq_status sq_net_reflect(const char* text, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    if (!text) throw NullArgument("text is NULL");
    const std::string s(text);
    *out = make_strings({is_junction_text(s) ? nets::to_string(nets::reflect(nets::parse_junction(s)))
                                             : nets::to_string(nets::reflect(nets::parse_net(s)))});
  });
}

sq_status sq_junction_adjacency(const char* text, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    if (!text) throw NullArgument("text is NULL");
    const auto [x, y] = nets::adjacency(nets::parse_junction(text));
    *out = make_strings({nets::to_string(x), nets::to_string(y)});
  });
}

sq_status sq_existence_witness(sq_parts parts, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    *out = make_strings({nets::to_string(nets::existence_witness(to_cpp(parts)))});
  });
}

sq_status sq_count_u_special(sq_parts parts, sq_delta_reading reading, long* out) {
  return guarded([&] {
    need_out(out);
    *out = nets::count_u_special(to_cpp(parts), reading == SQ_DELTA_SINGLE_HALVING
                                                    ? nets::DeltaReading::single_halving
                                                    : nets::DeltaReading::literal);
  });
}

sq_status sq_lower_bound(sq_parts parts, sq_delta_reading reading, long* out) {
  return guarded([&] {
    need_out(out);
    *out = nets::lower_bound(to_cpp(parts), reading == SQ_DELTA_SINGLE_HALVING
                                                ? nets::DeltaReading::single_halving
                                                : nets::DeltaReading::literal);
  });
}

sq_status sq_build_chains(sq_parts parts, sq_chainlist** out) {
  return guarded([&] {
    need_out(out);
    const auto cs = nets::build_chains(to_cpp(parts));
    auto* res = new sq_chainlist;
    for (const auto& c : cs.chains) {
      sq_chainlist::Entry e;
      e.kind = nets::to_string(c.kind);
      for (const auto& n : c.nets) e.nets.push_back(nets::to_string(n));
      for (const auto& t : c.junctions) e.junctions.push_back(nets::to_string(t));
      res->chains.push_back(std::move(e));
    }
    res->violations = cs.violations;
    *out = res;
  });
}

size_t sq_chainlist_size(const sq_chainlist* list) { return list ? list->chains.size() : 0; }

const char* sq_chain_kind(const sq_chainlist* list, size_t chain) {
  return list && chain < list->chains.size() ? list->chains[chain].kind.c_str() : nullptr;
}

size_t sq_chain_length(const sq_chainlist* list, size_t chain) {
  return list && chain < list->chains.size() ? list->chains[chain].junctions.size() : 0;
}

size_t sq_chain_net_count(const sq_chainlist* list, size_t chain) {
  return list && chain < list->chains.size() ? list->chains[chain].nets.size() : 0;
}

const char* sq_chain_net(const sq_chainlist* list, size_t chain, size_t index) {
  if (!list || chain >= list->chains.size() || index >= list->chains[chain].nets.size()) return nullptr;
  return list->chains[chain].nets[index].c_str();
}

const char* sq_chain_junction(const sq_chainlist* list, size_t chain, size_t index) {
  if (!list || chain >= list->chains.size() || index >= list->chains[chain].junctions.size())
    return nullptr;
  return list->chains[chain].junctions[index].c_str();
}

size_t sq_chainlist_violation_count(const sq_chainlist* list) {
  return list ? list->violations.size() : 0;
}

const char* sq_chainlist_violation(const sq_chainlist* list, size_t index) {
  return list && index < list->violations.size() ? list->violations[index].c_str() : nullptr;
}

void sq_chainlist_destroy(sq_chainlist* list) { delete list; }

sq_status sq_position_of(const char* a, sq_position* out) {
  return guarded([&] {
    need_out(out);
    switch (verify::position_of(parse_rational(a, "a"))) {
      case verify::Position::negative: *out = SQ_POS_NEGATIVE; break;
      case verify::Position::unit: *out = SQ_POS_UNIT; break;
      case verify::Position::above: *out = SQ_POS_ABOVE; break;
    }
  });
}

sq_status sq_parts_from_heun(const sq_params* params, sq_position position, sq_parts* out) {
  return guarded([&] {
    need_out(out);
    *out = to_c(verify::parts_from_heun(need(params, "params").angles, to_cpp(position)));
  });
}

sq_status sq_parts_from_assignment(const sq_params* params, sq_corner a0, sq_corner a1, sq_corner a2,
                                   sq_parts* out) {
  return guarded([&] {
    need_out(out);
    *out = to_c(verify::parts_from_assignment(need(params, "params").angles,
                                              {to_cpp(a0), to_cpp(a1), to_cpp(a2)}));
  });
}

sq_status sq_sample_grid(sq_position position, size_t n, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    *out = make_strings(rationals_text(verify::sample_grid(to_cpp(position), n)));
  });
}

sq_status sq_default_angle_grid(sq_strings** out) {
  return guarded([&] {
    need_out(out);
    std::vector<std::string> v;
    for (const auto& g : verify::default_angle_grid())
      v.push_back(std::to_string(g.alpha0()) + "," + g.alpha1().str() + "," + g.alpha_a().str() +
                  "," + g.alpha_inf().str());
    *out = make_strings(std::move(v));
  });
}

sq_status sq_cross_validate(const sq_params* params, const char* const* samples, size_t count,
                            unsigned digits, sq_report** out) {
  return guarded([&] {
    need_out(out);
    if (count > 0 && samples == nullptr) throw NullArgument("samples is NULL");
    std::vector<Rational> a;
    for (size_t t = 0; t < count; ++t) a.push_back(parse_rational(samples[t], "sample"));
    auto* res = new sq_report;
    try {
      res->report = verify::cross_validate(need(params, "params").angles, a, sigma_options(digits));
    } catch (...) {
      delete res;
      throw;
    }
    for (const auto& r : res->report.rows) res->a_text.push_back(r.a.str());
    res->jsonl = verify::to_jsonl(res->report);
    *out = res;
  });
}

size_t sq_report_size(const sq_report* report) { return report ? report->report.rows.size() : 0; }

sq_status sq_report_row(const sq_report* report, size_t index, sq_verify_row* out) {
  return guarded([&] {
    need_out(out);
    const auto& rows = need(report, "report").report.rows;
    if (index >= rows.size()) throw NullArgument("row index out of range");
    const auto& r = rows[index];
    sq_verify_row v{};
    v.position = r.position == verify::Position::negative
                     ? SQ_POS_NEGATIVE
                     : (r.position == verify::Position::unit ? SQ_POS_UNIT : SQ_POS_ABOVE);
    v.alpha0 = r.alpha0;
    v.parts = to_c(r.parts);
    v.real_distinct = r.real_distinct;
    v.real_with_multiplicity = r.real_with_multiplicity;
    v.pontryagin_defined = r.pontryagin_defined;
    v.pontryagin_lb = r.pontryagin_lb;
    v.combinatorial_lb = r.combinatorial_lb;
    v.upper_ok = r.upper_ok;
    v.parity_ok = r.parity_ok;
    v.combinatorial_ok = r.combinatorial_ok;
    v.pontryagin_ok = r.pontryagin_ok;
    v.inconclusive = r.inconclusive;
    v.pass = r.passed();
    *out = v;
  });
}

const char* sq_report_row_a(const sq_report* report, size_t index) {
  return report && index < report->a_text.size() ? report->a_text[index].c_str() : nullptr;
}

size_t sq_report_failures(const sq_report* report) { return report ? report->report.failures() : 0; }

size_t sq_report_inconclusive(const sq_report* report) {
  return report ? report->report.inconclusive() : 0;
}

const char* sq_report_jsonl(const sq_report* report) { return report ? report->jsonl.c_str() : nullptr; }
void sq_report_destroy(sq_report* report) { delete report; }

sq_status sq_report_summary(const sq_report* const* reports, size_t count, sq_strings** out) {
  return guarded([&] {
    need_out(out);
    if (count > 0 && reports == nullptr) throw NullArgument("reports is NULL");
    std::vector<verify::VerifyReport> v;
    for (size_t t = 0; t < count; ++t) v.push_back(need(reports[t], "report").report);
    *out = make_strings({verify::summary_table(v)});
  });
}

sq_status sq_limit_check(const sq_params* params, const char* a, const char* factor,
                         sq_limit_result* out) {
  return guarded([&] {
    need_out(out);
    const auto r = verify::limit_check(need(params, "params").angles, parse_rational(a, "a"),
                                       parse_rational(factor, "factor"));
    *out = sq_limit_result{r.all_real ? 1 : 0, r.within_tolerance ? 1 : 0, r.max_scaled_deviation};
  });
}

}  // extern "C"
