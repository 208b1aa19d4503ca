/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Exercises libsphquad through its C header only.
#include <doctest.h>

#include <string>
#include <vector>

#include "sphquad/sphquad.h"

namespace {

std::vector<std::string> take(sq_strings* s) {
  std::vector<std::string> out;
  for (size_t t = 0; t < sq_strings_size(s); ++t) out.emplace_back(sq_strings_at(s, t));
  sq_strings_destroy(s);
  return out;
}

sq_params* example(const char* a) {
  sq_params* p = nullptr;
  REQUIRE(sq_params_create(4, "1/2", "3/2", "1/2", a, &p) == SQ_OK);
  return p;
}

}  // namespace

TEST_CASE("status and errors") {
  CHECK(std::string(sq_status_string(SQ_OK)) == "ok");
  CHECK(std::string(sq_version()).size() > 0);
  sq_params* p = nullptr;
  CHECK(sq_params_create(4, "1/2", "3/2", "1/2", "1", &p) == SQ_ERR_DOMAIN);
  CHECK(p == nullptr);
  CHECK(std::string(sq_last_error()).find("differ") != std::string::npos);
  CHECK(sq_params_create(4, "0.5", "3/2", "1/2", "2", &p) == SQ_ERR_PARSE);
  CHECK(sq_params_create(0, "1/2", "3/2", "1/2", "2", &p) == SQ_ERR_DOMAIN);
  CHECK(sq_params_create(4, "1/2", "3/2", "1/2", "2", nullptr) == SQ_ERR_INVALID_ARGUMENT);
  CHECK(sq_params_create(4, nullptr, "3/2", "1/2", "2", &p) == SQ_ERR_INVALID_ARGUMENT);
  sq_params_destroy(nullptr);
  sq_strings_destroy(nullptr);
  sq_poly_destroy(nullptr);
}

TEST_CASE("heun quantities") {
  sq_params* p = example("-1");
  sq_strings* s = nullptr;
  REQUIRE(sq_exponent_data(p, &s) == SQ_OK);
  CHECK(take(s) == std::vector<std::string>{"-4", "63/16"});
  REQUIRE(sq_recurrence(p, 2, &s) == SQ_OK);
  CHECK(take(s) == std::vector<std::string>{"3", "-2", "15/16"});
  REQUIRE(sq_jacobi_matrix(p, &s) == SQ_OK);
  const auto j = take(s);
  CHECK(j.size() == 16);
  CHECK(j[0] == "0");
  CHECK(j[1] == "3");
  REQUIRE(sq_limit_spectrum(p, &s) == SQ_OK);
  CHECK(take(s).size() == 4);

  sq_pontryagin pb{};
  int signs[8] = {};
  size_t len = 0;
  REQUIRE(sq_pontryagin_bound(p, &pb, signs, 8, &len) == SQ_OK);
  CHECK(pb.defined == 1);
  CHECK(pb.max_nonreal_pairs == 1);
  CHECK(pb.real_lower_bound == 2);
  CHECK(len == 4);
  CHECK(signs[3] == -1);
  sq_params_destroy(p);
}

TEST_CASE("polynomials") {
  sq_params* p = nullptr;
  REQUIRE(sq_params_create(2, "1/2", "1/2", "1/2", "1/2", &p) == SQ_OK);
  sq_poly* g = nullptr;
  REQUIRE(sq_accessory_polynomial(p, &g) == SQ_OK);
  CHECK(sq_poly_degree(g) == 2);
  CHECK(std::string(sq_poly_text(g)) == "2*x^2 - 3/2*x + 3/16");
  CHECK(std::string(sq_poly_coefficient(g, 0)) == "3/16");
  size_t d = 0, m = 0;
  REQUIRE(sq_count_real_roots(g, nullptr, nullptr, &d, &m) == SQ_OK);
  CHECK(d == 2);
  CHECK(m == 2);
  REQUIRE(sq_count_real_roots(g, "0", "1/4", &d, nullptr) == SQ_OK);
  CHECK(d == 1);
  sq_intervals* iv = nullptr;
  REQUIRE(sq_isolate_real_roots(g, "1/1024", &iv) == SQ_OK);
  CHECK(sq_intervals_size(iv) == 2);
  CHECK(sq_intervals_mid(iv, 0) == doctest::Approx(0.1585).epsilon(1e-2));
  sq_intervals_destroy(iv);
  CHECK(sq_isolate_real_roots(g, "0", &iv) == SQ_ERR_DOMAIN);
  sq_poly_destroy(g);
  sq_params_destroy(p);

  const char* c[] = {"1", "0", "-2", "0", "1"};  // (x^2 - 1)^2
  REQUIRE(sq_poly_from_coefficients(c, 5, &g) == SQ_OK);
  REQUIRE(sq_count_real_roots(g, nullptr, nullptr, &d, &m) == SQ_OK);
  CHECK(d == 2);
  CHECK(m == 4);
  sq_poly_destroy(g);
  const char* z[] = {"0"};
  REQUIRE(sq_poly_from_coefficients(z, 1, &g) == SQ_OK);
  CHECK(sq_poly_degree(g) == -1);
  CHECK(sq_count_real_roots(g, nullptr, nullptr, &d, &m) == SQ_ERR_DOMAIN);
  sq_poly_destroy(g);
}

TEST_CASE("sigma") {
  sq_sigma* s = nullptr;
  REQUIRE(sq_sigma_invariant("1/3", "1/3", "1/3", 0, 0, &s) == SQ_OK);
  CHECK(sq_sigma_compare_to_one(s) == 0);
  CHECK(std::string(sq_sigma_verdict(s)) == "boundary");
  sq_sigma_destroy(s);
  sq_params* p = example(nullptr);
  REQUIRE(sq_unitarizable(p, 30, &s) == SQ_OK);
  CHECK(std::string(sq_sigma_verdict(s)) == "yes");
  CHECK(std::string(sq_sigma_decimal(s)) == "0");
  sq_sigma_destroy(s);
  sq_params_destroy(p);
  const long parts[] = {0, 1, 0};
  const long ints[] = {4};
  CHECK(sq_sigma0_parity(parts, 3, ints, 1) == 0);
}

TEST_CASE("nets") {
  sq_parts p{};
  REQUIRE(sq_parts_parse("1,4,0,4", &p) == SQ_OK);
  CHECK(p.A1 == 4);
  CHECK(sq_parts_parse("1,4,0", &p) == SQ_ERR_PARSE);
  REQUIRE(sq_parts_parse("1,4,0,4", &p) == SQ_OK);

  sq_strings* s = nullptr;
  REQUIRE(sq_enumerate_nets(p, &s) == SQ_OK);
  const auto nets = take(s);
  CHECK(nets.size() >= 4);
  REQUIRE(sq_enumerate_junctions(p, &s) == SQ_OK);
  CHECK(take(s).size() == 6);

  long u = 0, lb = 0;
  REQUIRE(sq_count_u_special(p, SQ_DELTA_LITERAL, &u) == SQ_OK);
  REQUIRE(sq_lower_bound(p, SQ_DELTA_LITERAL, &lb) == SQ_OK);
  CHECK(u == 2);
  CHECK(lb == 0);

  sq_chainlist* cl = nullptr;
  REQUIRE(sq_build_chains(p, &cl) == SQ_OK);
  CHECK(sq_chainlist_size(cl) == 4);
  CHECK(sq_chainlist_violation_count(cl) == 0);
  size_t total_len = 0;
  for (size_t c = 0; c < sq_chainlist_size(cl); ++c) {
    total_len += sq_chain_length(cl, c);
    CHECK(sq_chain_net_count(cl, c) == sq_chain_length(cl, c) + 1);
  }
  CHECK(total_len == 6);
  CHECK(sq_chain_net(cl, 99, 0) == nullptr);
  sq_chainlist_destroy(cl);

  sq_parts q{};
  REQUIRE(sq_net_parts("U[1,1]^1", &q) == SQ_OK);
  CHECK(q.A1 == 3);
  REQUIRE(sq_net_parts("Mbar1+T1^1", &q) == SQ_OK);
  CHECK(q.A3 == 4);
  REQUIRE(sq_net_validate("X[2,0]+D(i=1,k=0,l=0,m=0)", &s) == SQ_OK);
  CHECK(take(s).size() == 1);
  REQUIRE(sq_net_canonicalize("V[1,1]^1+D(i=1,k=0,l=0,m=0)", &s) == SQ_OK);
  CHECK(take(s) == std::vector<std::string>{"Xbar[3,1]^1+D(i=0,k=0,l=0,m=1)"});
  REQUIRE(sq_net_reflect("U[1,2]", &s) == SQ_OK);
  CHECK(take(s) == std::vector<std::string>{"Ubar[2,1]"});
  REQUIRE(sq_net_equivalence_class("V[1,1]^1+D(i=1,k=0,l=0,m=0)", &s) == SQ_OK);
  CHECK(take(s).size() >= 2);
  REQUIRE(sq_junction_adjacency("Mbar1+T1^1", &s) == SQ_OK);
  CHECK(take(s) == std::vector<std::string>{"U[1,1]^1", "V[1,1]^1"});
  CHECK(sq_net_parts("W[1,1]", &q) == SQ_ERR_PARSE);

  REQUIRE(sq_parts_parse("0,0,0,1", &p) == SQ_OK);
  REQUIRE(sq_existence_witness(p, &s) == SQ_OK);
  CHECK(take(s) == std::vector<std::string>{"X[0,0]"});
}

TEST_CASE("verification") {
  sq_position pos{};
  REQUIRE(sq_position_of("-1", &pos) == SQ_OK);
  CHECK(pos == SQ_POS_NEGATIVE);
  CHECK(sq_position_of("0", &pos) == SQ_ERR_DOMAIN);

  sq_params* p = example(nullptr);
  sq_parts q{};
  REQUIRE(sq_parts_from_heun(p, SQ_POS_NEGATIVE, &q) == SQ_OK);
  CHECK(q.A1 == 0);
  CHECK(q.A3 == 4);
  REQUIRE(sq_parts_from_assignment(p, SQ_CORNER_ONE, SQ_CORNER_A, SQ_CORNER_INF, &q) == SQ_OK);
  CHECK(q.A1 == 1);

  sq_strings* s = nullptr;
  REQUIRE(sq_sample_grid(SQ_POS_NEGATIVE, 10, &s) == SQ_OK);
  const auto samples = take(s);
  std::vector<const char*> cs;
  for (const auto& x : samples) cs.push_back(x.c_str());
  sq_report* rep = nullptr;
  REQUIRE(sq_cross_validate(p, cs.data(), cs.size(), 0, &rep) == SQ_OK);
  CHECK(sq_report_size(rep) == 10);
  CHECK(sq_report_failures(rep) == 0);
  sq_verify_row row{};
  REQUIRE(sq_report_row(rep, 0, &row) == SQ_OK);
  CHECK(row.real_with_multiplicity == 4);
  CHECK(row.combinatorial_lb == 4);
  CHECK(row.pass == 1);
  CHECK(sq_report_row(rep, 10, &row) == SQ_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sq_report_row_a(rep, 0)) == samples[0]);
  CHECK(std::string(sq_report_jsonl(rep)).find("\"schema\":1") != std::string::npos);
  const sq_report* reps[] = {rep};
  REQUIRE(sq_report_summary(reps, 1, &s) == SQ_OK);
  CHECK(take(s).front().find("total 10 samples") != std::string::npos);
  sq_report_destroy(rep);

  sq_limit_result lr{};
  REQUIRE(sq_limit_check(p, "1/65536", "10", &lr) == SQ_OK);
  CHECK(lr.all_real == 1);
  CHECK(sq_limit_check(p, "0", "10", &lr) == SQ_ERR_DOMAIN);
  sq_params_destroy(p);

  REQUIRE(sq_default_angle_grid(&s) == SQ_OK);
  CHECK(take(s).size() == 25);
}
