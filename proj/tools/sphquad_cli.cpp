/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// sphquad: command-line front end over the C interface.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphquad/sphquad.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInvariant = 3;

struct Failure {
  int code;
  std::string message;
};

void check(sq_status s) {
  if (s == SQ_OK) return;
  const int code = (s == SQ_ERR_INVARIANT || s == SQ_ERR_INTERNAL) ? kExitInvariant : kExitValidation;
  throw Failure{code, std::string(sq_status_string(s)) + ": " + sq_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using Params = std::unique_ptr<sq_params, Deleter<sq_params, sq_params_destroy>>;
using PolyH = std::unique_ptr<sq_poly, Deleter<sq_poly, sq_poly_destroy>>;
using Strings = std::unique_ptr<sq_strings, Deleter<sq_strings, sq_strings_destroy>>;
using Intervals = std::unique_ptr<sq_intervals, Deleter<sq_intervals, sq_intervals_destroy>>;
using Sigma = std::unique_ptr<sq_sigma, Deleter<sq_sigma, sq_sigma_destroy>>;
using Chains = std::unique_ptr<sq_chainlist, Deleter<sq_chainlist, sq_chainlist_destroy>>;
using Report = std::unique_ptr<sq_report, Deleter<sq_report, sq_report_destroy>>;

std::vector<std::string> to_vector(const sq_strings* s) {
  std::vector<std::string> out;
  for (size_t t = 0; t < sq_strings_size(s); ++t) out.emplace_back(sq_strings_at(s, t));
  return out;
}

struct Options {
  long alpha0 = 0;
  std::string alpha1, alpha_a, alpha_inf, a;
  std::string format = "text";
  unsigned digits = 0;
  std::string out;
  std::string width = "1/1024";
  std::string parts;
  std::size_t grid = 64;
  std::string net;
};

class Emitter {
 public:
  explicit Emitter(const Options& o) : fmt_(o.format) {}
  const std::string& format() const { return fmt_; }
  std::ostringstream& stream() { return os_; }

  void json_doc(const json& j) { os_ << j.dump(2) << '\n'; }
  std::string str() const { return os_.str(); }

 private:
  std::string fmt_;
  std::ostringstream os_;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json parts_json(const sq_parts& p) { return json::array({p.A0, p.A1, p.A2, p.A3}); }

std::string parts_text(const sq_parts& p) {
  return std::to_string(p.A0) + "," + std::to_string(p.A1) + "," + std::to_string(p.A2) + "," +
         std::to_string(p.A3);
}

void require_angles(const Options& o) {
  if (o.alpha0 < 1) throw Failure{kExitValidation, "--alpha0 must be a positive integer"};
  if (o.alpha1.empty() || o.alpha_a.empty() || o.alpha_inf.empty())
    throw Failure{kExitValidation, "--alpha1, --alphaa and --alphainf are required"};
}

Params make_params(const Options& o, bool with_a) {
  require_angles(o);
  if (with_a && o.a.empty()) throw Failure{kExitValidation, "-a is required"};
  sq_params* p = nullptr;
  check(sq_params_create(o.alpha0, o.alpha1.c_str(), o.alpha_a.c_str(), o.alpha_inf.c_str(),
                         with_a ? o.a.c_str() : nullptr, &p));
  return Params(p);
}

sq_parts make_parts(const Options& o) {
  if (o.parts.empty()) throw Failure{kExitValidation, "--parts is required"};
  sq_parts p{};
  check(sq_parts_parse(o.parts.c_str(), &p));
  return p;
}

json header(const char* command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

json angles_json(const Options& o) {
  json j;
  j["alpha0"] = o.alpha0;
  j["alpha1"] = o.alpha1;
  j["alpha_a"] = o.alpha_a;
  j["alpha_inf"] = o.alpha_inf;
  if (!o.a.empty()) j["a"] = o.a;
  return j;
}

// ---- subcommands -----------------------------------------------------------

void run_poly(const Options& o, Emitter& e) {
  const Params p = make_params(o, true);
  sq_poly* raw = nullptr;
  check(sq_accessory_polynomial(p.get(), &raw));
  const PolyH g(raw);
  std::vector<std::string> coeffs;
  for (size_t k = 0; k < sq_poly_size(g.get()); ++k) coeffs.emplace_back(sq_poly_coefficient(g.get(), k));
  if (e.format() == "json") {
    json j = header("poly");
    j["params"] = angles_json(o);
    j["degree"] = sq_poly_degree(g.get());
    j["coefficients"] = coeffs;
    j["text"] = sq_poly_text(g.get());
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "power,coefficient\n";
    for (size_t k = 0; k < coeffs.size(); ++k) e.stream() << k << ',' << coeffs[k] << '\n';
  } else {
    e.stream() << "G(x) = " << sq_poly_text(g.get()) << '\n';
    e.stream() << "coefficients (ascending): [";
    for (size_t k = 0; k < coeffs.size(); ++k) e.stream() << (k ? ", " : "") << coeffs[k];
    e.stream() << "]\n";
  }
}

void run_roots(const Options& o, Emitter& e) {
  const Params p = make_params(o, true);
  sq_poly* raw = nullptr;
  check(sq_accessory_polynomial(p.get(), &raw));
  const PolyH g(raw);
  sq_intervals* iv_raw = nullptr;
  check(sq_isolate_real_roots(g.get(), o.width.c_str(), &iv_raw));
  const Intervals iv(iv_raw);
  const size_t n = sq_intervals_size(iv.get());
  if (e.format() == "json") {
    json j = header("roots");
    j["params"] = angles_json(o);
    j["width"] = o.width;
    json arr = json::array();
    for (size_t t = 0; t < n; ++t)
      arr.push_back({{"lo", sq_intervals_lo(iv.get(), t)},
                     {"hi", sq_intervals_hi(iv.get(), t)},
                     {"approx", sq_intervals_mid(iv.get(), t)}});
    j["intervals"] = arr;
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "index,lo,hi,approx\n";
    for (size_t t = 0; t < n; ++t)
      e.stream() << t << ',' << sq_intervals_lo(iv.get(), t) << ',' << sq_intervals_hi(iv.get(), t)
                 << ',' << sq_intervals_mid(iv.get(), t) << '\n';
  } else {
    e.stream() << n << " real root(s)\n";
    for (size_t t = 0; t < n; ++t)
      e.stream() << "  (" << sq_intervals_lo(iv.get(), t) << ", " << sq_intervals_hi(iv.get(), t)
                 << "]  ~ " << sq_intervals_mid(iv.get(), t) << '\n';
  }
}

struct Pontryagin {
  bool defined = false;
  sq_pontryagin data{};
  std::vector<int> signs;
};

Pontryagin pontryagin(const sq_params* p) {
  Pontryagin r;
  size_t len = 0;
  r.signs.resize(64);
  sq_status s = sq_pontryagin_bound(p, &r.data, r.signs.data(), r.signs.size(), &len);
  if (len > r.signs.size()) {
    r.signs.resize(len);
    s = sq_pontryagin_bound(p, &r.data, r.signs.data(), r.signs.size(), &len);
  }
  r.signs.resize(len);
  if (s == SQ_ERR_UNDEFINED) return r;
  check(s);
  r.defined = true;
  return r;
}

void run_count(const Options& o, Emitter& e) {
  const Params p = make_params(o, true);
  sq_poly* raw = nullptr;
  check(sq_accessory_polynomial(p.get(), &raw));
  const PolyH g(raw);
  size_t distinct = 0, mult = 0;
  check(sq_count_real_roots(g.get(), nullptr, nullptr, &distinct, &mult));
  const Pontryagin pb = pontryagin(p.get());
  sq_position pos{};
  check(sq_position_of(o.a.c_str(), &pos));
  sq_parts parts{};
  check(sq_parts_from_heun(p.get(), pos, &parts));
  long comb = 0;
  check(sq_lower_bound(parts, SQ_DELTA_LITERAL, &comb));
  sq_sigma* sraw = nullptr;
  check(sq_unitarizable(p.get(), o.digits, &sraw));
  const Sigma sg(sraw);

  if (e.format() == "json") {
    json j = header("count");
    j["params"] = angles_json(o);
    j["real"] = mult;
    j["real_distinct"] = distinct;
    j["alpha0"] = o.alpha0;
    j["pontryagin_lb"] = pb.defined ? json(pb.data.real_lower_bound) : json(nullptr);
    j["combinatorial_lb"] = comb;
    j["parts"] = parts_json(parts);
    j["sigma"] = sq_sigma_decimal(sg.get());
    j["unitarizable"] = sq_sigma_verdict(sg.get());
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "real,real_distinct,alpha0,pontryagin_lb,combinatorial_lb,parts,sigma,unitarizable\n";
    e.stream() << mult << ',' << distinct << ',' << o.alpha0 << ','
               << (pb.defined ? std::to_string(pb.data.real_lower_bound) : "") << ',' << comb << ','
               << csv_escape(parts_text(parts)) << ',' << sq_sigma_decimal(sg.get()) << ','
               << sq_sigma_verdict(sg.get()) << '\n';
  } else {
    e.stream() << "real=" << mult << " (distinct " << distinct << ") of alpha0=" << o.alpha0 << '\n'
               << "pontryagin_lb=" << (pb.defined ? std::to_string(pb.data.real_lower_bound) : "undefined")
               << '\n'
               << "combinatorial_lb=" << comb << " parts=" << parts_text(parts) << '\n'
               << "sigma=" << sq_sigma_decimal(sg.get()) << '\n'
               << "unitarizable=" << sq_sigma_verdict(sg.get()) << '\n';
  }
}

void run_bound(const Options& o, Emitter& e) {
  const Params p = make_params(o, true);
  const Pontryagin pb = pontryagin(p.get());
  std::string signs;
  for (int s : pb.signs) signs += s > 0 ? '+' : '-';
  if (e.format() == "json") {
    json j = header("bound");
    j["params"] = angles_json(o);
    j["defined"] = pb.defined;
    j["signs"] = pb.signs;
    j["P"] = pb.data.positive;
    j["N"] = pb.data.negative;
    j["max_nonreal_pairs"] = pb.defined ? json(pb.data.max_nonreal_pairs) : json(nullptr);
    j["real_lower_bound"] = pb.defined ? json(pb.data.real_lower_bound) : json(nullptr);
    j["all_real_simple"] = pb.data.all_real_simple != 0;
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "defined,signs,P,N,max_nonreal_pairs,real_lower_bound,all_real_simple\n";
    e.stream() << (pb.defined ? "true" : "false") << ',' << signs << ',' << pb.data.positive << ','
               << pb.data.negative << ',' << pb.data.max_nonreal_pairs << ','
               << pb.data.real_lower_bound << ',' << (pb.data.all_real_simple ? "true" : "false") << '\n';
  } else if (!pb.defined) {
    e.stream() << "undefined: some p_j vanishes\n";
  } else {
    e.stream() << "signs " << signs << "  P=" << pb.data.positive << " N=" << pb.data.negative << '\n'
               << "at most " << pb.data.max_nonreal_pairs << " non-real pair(s), at least "
               << pb.data.real_lower_bound << " real root(s)\n";
    if (pb.data.all_real_simple) e.stream() << "all eigenvalues real and simple\n";
  }
}

void run_sigma(const Options& o, Emitter& e) {
  const Params p = make_params(o, false);
  sq_sigma* raw = nullptr;
  check(sq_unitarizable(p.get(), o.digits, &raw));
  const Sigma sg(raw);
  if (e.format() == "json") {
    json j = header("sigma");
    j["params"] = angles_json(o);
    j["sigma"] = sq_sigma_decimal(sg.get());
    j["approx"] = sq_sigma_approx(sg.get());
    j["unitarizable"] = sq_sigma_verdict(sg.get());
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "sigma,unitarizable\n" << sq_sigma_decimal(sg.get()) << ',' << sq_sigma_verdict(sg.get()) << '\n';
  } else {
    e.stream() << "sigma=" << sq_sigma_decimal(sg.get()) << '\n'
               << "unitarizable=" << sq_sigma_verdict(sg.get()) << '\n';
  }
}

void run_nets(const Options& o, Emitter& e) {
  const sq_parts parts = make_parts(o);
  sq_strings* raw = nullptr;
  check(sq_enumerate_nets(parts, &raw));
  const Strings nets(raw);
  check(sq_enumerate_junctions(parts, &raw));
  const Strings junctions(raw);
  if (e.format() == "json") {
    json j = header("nets");
    j["parts"] = parts_json(parts);
    j["nets"] = to_vector(nets.get());
    j["junctions"] = to_vector(junctions.get());
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "type,descriptor\n";
    for (const auto& s : to_vector(nets.get())) e.stream() << "net," << csv_escape(s) << '\n';
    for (const auto& s : to_vector(junctions.get())) e.stream() << "junction," << csv_escape(s) << '\n';
  } else {
    e.stream() << "nets:\n";
    for (const auto& s : to_vector(nets.get())) e.stream() << "  " << s << '\n';
    e.stream() << "junctions:\n";
    for (const auto& s : to_vector(junctions.get())) e.stream() << "  " << s << '\n';
  }
}

void run_chains(const Options& o, Emitter& e) {
  const sq_parts parts = make_parts(o);
  sq_chainlist* raw = nullptr;
  check(sq_build_chains(parts, &raw));
  const Chains cl(raw);
  long u = 0, lb = 0;
  check(sq_count_u_special(parts, SQ_DELTA_LITERAL, &u));
  check(sq_lower_bound(parts, SQ_DELTA_LITERAL, &lb));
  const size_t n = sq_chainlist_size(cl.get());
  size_t counts[3] = {0, 0, 0};
  for (size_t c = 0; c < n; ++c) {
    const std::string k = sq_chain_kind(cl.get(), c);
    counts[k == "aa" ? 0 : (k == "bb" ? 1 : 2)] += 1;
  }
  std::vector<std::string> violations;
  for (size_t t = 0; t < sq_chainlist_violation_count(cl.get()); ++t)
    violations.emplace_back(sq_chainlist_violation(cl.get(), t));

  if (e.format() == "json") {
    json j = header("chains");
    j["parts"] = parts_json(parts);
    json arr = json::array();
    for (size_t c = 0; c < n; ++c) {
      json ch;
      ch["kind"] = sq_chain_kind(cl.get(), c);
      ch["length"] = sq_chain_length(cl.get(), c);
      std::vector<std::string> ns, js;
      for (size_t t = 0; t < sq_chain_net_count(cl.get(), c); ++t) ns.emplace_back(sq_chain_net(cl.get(), c, t));
      for (size_t t = 0; t < sq_chain_length(cl.get(), c); ++t) js.emplace_back(sq_chain_junction(cl.get(), c, t));
      ch["nets"] = ns;
      ch["junctions"] = js;
      arr.push_back(ch);
    }
    j["chains"] = arr;
    j["totals"] = {{"chains", n}, {"aa", counts[0]}, {"bb", counts[1]}, {"ab", counts[2]}};
    j["u_special"] = u;
    j["lower_bound"] = lb;
    j["violations"] = violations;
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "index,kind,length,nets,junctions\n";
    for (size_t c = 0; c < n; ++c) {
      std::string ns, js;
      for (size_t t = 0; t < sq_chain_net_count(cl.get(), c); ++t) ns += (t ? ";" : "") + std::string(sq_chain_net(cl.get(), c, t));
      for (size_t t = 0; t < sq_chain_length(cl.get(), c); ++t) js += (t ? ";" : "") + std::string(sq_chain_junction(cl.get(), c, t));
      e.stream() << c << ',' << sq_chain_kind(cl.get(), c) << ',' << sq_chain_length(cl.get(), c) << ','
                 << csv_escape(ns) << ',' << csv_escape(js) << '\n';
    }
  } else {
    for (size_t c = 0; c < n; ++c) {
      e.stream() << sq_chain_kind(cl.get(), c) << " length " << sq_chain_length(cl.get(), c) << ": ";
      for (size_t t = 0; t < sq_chain_net_count(cl.get(), c); ++t) {
        if (t > 0) e.stream() << " -[" << sq_chain_junction(cl.get(), c, t - 1) << "]- ";
        e.stream() << sq_chain_net(cl.get(), c, t);
      }
      e.stream() << '\n';
    }
    e.stream() << n << " chains: aa=" << counts[0] << " bb=" << counts[1] << " ab=" << counts[2]
               << "; u=" << u << " lower_bound=" << lb << '\n';
    for (const auto& v : violations) e.stream() << "violation: " << v << '\n';
  }
  if (!violations.empty()) throw Failure{kExitInvariant, "chain assembly reported violations"};
}

void run_witness(const Options& o, Emitter& e) {
  const sq_parts parts = make_parts(o);
  sq_strings* raw = nullptr;
  check(sq_existence_witness(parts, &raw));
  const Strings w(raw);
  if (e.format() == "json") {
    json j = header("witness");
    j["parts"] = parts_json(parts);
    j["witness"] = sq_strings_at(w.get(), 0);
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "parts,witness\n" << csv_escape(parts_text(parts)) << ',' << csv_escape(sq_strings_at(w.get(), 0)) << '\n';
  } else {
    e.stream() << sq_strings_at(w.get(), 0) << '\n';
  }
}

void run_net(const Options& o, Emitter& e) {
  if (o.net.empty()) throw Failure{kExitValidation, "a net descriptor is required"};
  sq_strings* raw = nullptr;
  check(sq_net_validate(o.net.c_str(), &raw));
  const Strings violations(raw);
  const auto v = to_vector(violations.get());
  json j = header("net");
  j["input"] = o.net;
  j["valid"] = v.empty();
  j["violations"] = v;
  if (v.empty()) {
    sq_parts parts{};
    check(sq_net_parts(o.net.c_str(), &parts));
    check(sq_net_canonicalize(o.net.c_str(), &raw));
    const Strings canon(raw);
    check(sq_net_reflect(o.net.c_str(), &raw));
    const Strings refl(raw);
    j["parts"] = parts_json(parts);
    j["canonical"] = sq_strings_at(canon.get(), 0);
    j["reflection"] = sq_strings_at(refl.get(), 0);
  }
  if (e.format() == "json") {
    e.json_doc(j);
  } else if (e.format() == "csv") {
    e.stream() << "input,valid,parts,canonical,reflection\n" << csv_escape(o.net) << ','
               << (v.empty() ? "true" : "false") << ',';
    if (v.empty())
      e.stream() << csv_escape(j["parts"].dump()) << ',' << csv_escape(j["canonical"].get<std::string>())
                 << ',' << csv_escape(j["reflection"].get<std::string>());
    else
      e.stream() << ",,";
    e.stream() << '\n';
  } else {
    e.stream() << o.net << (v.empty() ? " is valid\n" : " is invalid\n");
    for (const auto& s : v) e.stream() << "  " << s << '\n';
    if (v.empty())
      e.stream() << "parts " << j["parts"].dump() << "\ncanonical " << j["canonical"].get<std::string>()
                 << "\nreflection " << j["reflection"].get<std::string>() << '\n';
  }
  if (!v.empty()) throw Failure{kExitValidation, "invalid net"};
}

struct AngleSet {
  long alpha0;
  std::string alpha1, alpha_a, alpha_inf;
};

void run_verify(const Options& o, Emitter& e) {
  std::vector<AngleSet> sets;
  if (o.alpha0 != 0 || !o.alpha1.empty()) {
    require_angles(o);
    sets.push_back({o.alpha0, o.alpha1, o.alpha_a, o.alpha_inf});
  } else {
    sq_strings* raw = nullptr;
    check(sq_default_angle_grid(&raw));
    const Strings grid(raw);
    for (const auto& s : to_vector(grid.get())) {
      std::vector<std::string> f;
      std::stringstream ss(s);
      for (std::string t; std::getline(ss, t, ',');) f.push_back(t);
      sets.push_back({std::stol(f[0]), f[1], f[2], f[3]});
    }
  }
  std::vector<std::string> samples;
  for (sq_position pos : {SQ_POS_NEGATIVE, SQ_POS_UNIT, SQ_POS_ABOVE}) {
    sq_strings* raw = nullptr;
    check(sq_sample_grid(pos, o.grid, &raw));
    const Strings g(raw);
    for (const auto& s : to_vector(g.get())) samples.push_back(s);
  }
  std::vector<const char*> cs;
  for (const auto& s : samples) cs.push_back(s.c_str());

  std::vector<Report> reports;
  size_t failures = 0;
  for (const auto& a : sets) {
    sq_params* praw = nullptr;
    check(sq_params_create(a.alpha0, a.alpha1.c_str(), a.alpha_a.c_str(), a.alpha_inf.c_str(), nullptr, &praw));
    const Params p(praw);
    sq_report* rraw = nullptr;
    check(sq_cross_validate(p.get(), cs.data(), cs.size(), o.digits, &rraw));
    reports.emplace_back(rraw);
    failures += sq_report_failures(rraw);
  }

  if (e.format() == "json") {
    for (const auto& r : reports) e.stream() << sq_report_jsonl(r.get());
  } else if (e.format() == "csv") {
    e.stream() << "angles,a,position,real,real_distinct,alpha0,pontryagin_lb,combinatorial_lb,pass\n";
    for (size_t t = 0; t < reports.size(); ++t) {
      const auto& a = sets[t];
      const std::string angles = std::to_string(a.alpha0) + "," + a.alpha1 + "," + a.alpha_a + "," + a.alpha_inf;
      for (size_t r = 0; r < sq_report_size(reports[t].get()); ++r) {
        sq_verify_row row{};
        check(sq_report_row(reports[t].get(), r, &row));
        static const char* names[] = {"negative", "unit", "above"};
        e.stream() << csv_escape(angles) << ',' << sq_report_row_a(reports[t].get(), r) << ','
                   << names[row.position] << ',' << row.real_with_multiplicity << ',' << row.real_distinct
                   << ',' << row.alpha0 << ','
                   << (row.pontryagin_defined ? std::to_string(row.pontryagin_lb) : "") << ','
                   << row.combinatorial_lb << ',' << (row.pass ? "true" : "false") << '\n';
      }
    }
  } else {
    std::vector<const sq_report*> rs;
    for (const auto& r : reports) rs.push_back(r.get());
    sq_strings* raw = nullptr;
    check(sq_report_summary(rs.data(), rs.size(), &raw));
    const Strings table(raw);
    e.stream() << sq_strings_at(table.get(), 0);
  }
  if (failures > 0) throw Failure{kExitInvariant, std::to_string(failures) + " sample(s) failed"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical quadrilaterals with one integer corner"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&o](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--out", o.out, "Write output to FILE instead of stdout");
    c->add_option("--digits", o.digits, "Decimal digits for sigma (default 64)");
  };
  const auto add_angles = [&o](CLI::App* c, bool with_a) {
    c->add_option("--alpha0", o.alpha0, "Integer angle at z=0");
    c->add_option("--alpha1", o.alpha1, "Angle at z=1, rational p/q");
    c->add_option("--alphaa", o.alpha_a, "Angle at z=a, rational p/q");
    c->add_option("--alphainf", o.alpha_inf, "Angle at infinity, rational p/q");
    if (with_a) c->add_option("-a", o.a, "Position of the fourth singular point, rational p/q");
  };
  const auto add_parts = [&o](CLI::App* c) {
    c->add_option("--parts", o.parts, "Integer parts A0,A1,A2,A3")->required();
  };

  auto* poly = app.add_subcommand("poly", "Accessory polynomial coefficients");
  auto* roots = app.add_subcommand("roots", "Isolating intervals for the real roots");
  auto* count = app.add_subcommand("count", "Root counts, lower bounds and sigma verdict");
  auto* bound = app.add_subcommand("bound", "Signature bound detail");
  for (auto* c : {poly, roots, count, bound}) {
    add_angles(c, true);
    add_common(c);
  }
  roots->add_option("--width", o.width, "Maximum interval width (rational)");
  auto* sigma = app.add_subcommand("sigma", "Unitarizability invariant");
  add_angles(sigma, false);
  add_common(sigma);
  auto* nets = app.add_subcommand("nets", "Nets and junctions with given integer parts");
  auto* chains = app.add_subcommand("chains", "Chains with kinds and lengths");
  auto* witness = app.add_subcommand("witness", "One net realizing the integer parts");
  for (auto* c : {nets, chains, witness}) {
    add_parts(c);
    add_common(c);
  }
  auto* net = app.add_subcommand("net", "Validate and canonicalize a net descriptor");
  net->add_option("descriptor", o.net, "Net or junction text, e.g. U[1,1]^1")->required();
  add_common(net);
  auto* verify = app.add_subcommand("verify", "Cross-validation sweep");
  add_angles(verify, false);
  add_common(verify);
  verify->add_option("--grid", o.grid, "Moduli per position class")->check(CLI::Range(1, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  Emitter em(o);
  int code = kExitOk;
  try {
    if (*poly) run_poly(o, em);
    else if (*roots) run_roots(o, em);
    else if (*count) run_count(o, em);
    else if (*bound) run_bound(o, em);
    else if (*sigma) run_sigma(o, em);
    else if (*nets) run_nets(o, em);
    else if (*chains) run_chains(o, em);
    else if (*witness) run_witness(o, em);
    else if (*net) run_net(o, em);
    else if (*verify) run_verify(o, em);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    code = f.code;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    code = kExitInvariant;
  }

  const std::string text = em.str();
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return kExitValidation;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return code;
}
