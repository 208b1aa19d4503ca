/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sphquad/heun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include <mpfr.h>

#include "sphquad/error.hpp"

namespace sphquad::heun {

HeunAngles::HeunAngles(long alpha0, Rational alpha1, Rational alpha_a, Rational alpha_inf)
    : alpha0_(alpha0),
      alpha1_(std::move(alpha1)),
      alpha_a_(std::move(alpha_a)),
      alpha_inf_(std::move(alpha_inf)) {
  if (alpha0_ < 1) throw DomainError("alpha0 must be a positive integer");
  const auto check = [](const Rational& x, const char* name) {
    if (x.sign() <= 0) throw DomainError(std::string(name) + " must be positive");
    if (x.is_integer()) throw DomainError(std::string(name) + " must not be an integer");
  };
  check(alpha1_, "alpha1");
  check(alpha_a_, "alpha_a");
  check(alpha_inf_, "alpha_inf");
}

HeunParams::HeunParams(HeunAngles angles, Rational a) : angles_(std::move(angles)), a_(std::move(a)) {
  if (a_.is_zero() || a_ == Rational(1)) throw DomainError("a must differ from 0 and 1");
}

ExponentData exponent_data(const HeunAngles& angles) {
  const Rational s = Rational(2 - angles.alpha0()) - angles.alpha1() - angles.alpha_a();
  const Rational p = (s * s - angles.alpha_inf() * angles.alpha_inf()) / Rational(4);
  return {s, p};
}

Recurrence recurrence_coefficients(const HeunParams& params, long n) {
  if (n < 0) throw DomainError("recurrence index must be nonnegative");
  const auto& ang = params.angles();
  const Rational& a = params.a();
  const ExponentData e = exponent_data(ang);
  const Rational N(n);
  const Rational one(1);
  Recurrence out;
  out.r = Rational(n + 1) * Rational(n + 1 - ang.alpha0()) * a;
  out.q = N * (Rational(n - ang.alpha0()) * (one + a) + a * (one - ang.alpha1()) + one -
               ang.alpha_a());
  out.p = Rational(n - 1) * Rational(n - 1) + Rational(n - 1) * e.sum + e.product;
  return out;
}

Poly accessory_polynomial(const HeunParams& params) {
  const long n0 = params.angles().alpha0();
  const Poly lambda = Poly::identity();
  if (n0 == 1) return lambda;

  const Rational& a = params.a();
  Poly prev = Poly::constant(Rational(1));                     // c_0
  Poly cur = lambda * (Rational(1) / (a * Rational(1 - n0)));  // c_1
  for (long n = 1; n <= n0 - 2; ++n) {
    const Recurrence rc = recurrence_coefficients(params, n);
    Poly next = ((lambda + Poly::constant(rc.q)) * cur - prev * rc.p) * (Rational(1) / rc.r);
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Recurrence last = recurrence_coefficients(params, n0 - 1);
  return prev * last.p - (lambda + Poly::constant(last.q)) * cur;
}

Rational JacobiMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= dimension() || col >= dimension()) throw DomainError("matrix index out of range");
  if (row == col) return diag[row];
  if (col + 1 == row) return sub[col];
  if (row + 1 == col) return super[row];
  return Rational(0);
}

JacobiMatrix jacobi_matrix(const HeunParams& params) {
  const long n0 = params.angles().alpha0();
  JacobiMatrix j;
  for (long n = 0; n < n0; ++n) {
    const Recurrence rc = recurrence_coefficients(params, n);
    j.diag.push_back(-rc.q);
    if (n > 0) j.sub.push_back(rc.p);
    if (n + 1 < n0) j.super.push_back(rc.r);
  }
  return j;
}

PontryaginResult pontryagin_bound(const HeunParams& params) {
  const JacobiMatrix j = jacobi_matrix(params);
  PontryaginResult res;
  for (const auto& p : j.sub)
    if (p.is_zero()) return res;
  res.defined = true;
  Rational s(1);
  res.signs.push_back(1);
  res.all_real_simple = true;
  for (std::size_t k = 0; k < j.sub.size(); ++k) {
    s = s * j.super[k] / j.sub[k];
    res.signs.push_back(s.sign());
    if ((j.super[k] * j.sub[k]).sign() <= 0) res.all_real_simple = false;
  }
  for (int sg : res.signs) (sg > 0 ? res.positive : res.negative) += 1;
  res.max_nonreal_pairs = std::min(res.positive, res.negative);
  return res;
}

std::vector<Rational> limit_spectrum_a0(const HeunAngles& angles) {
  std::vector<Rational> out;
  for (long j = 0; j < angles.alpha0(); ++j)
    out.push_back(Rational(j) * (Rational(angles.alpha0() - j - 1) + angles.alpha_a()));
  return out;
}

int sigma0_parity(const std::vector<long>& integer_parts_of_nonint,
                  const std::vector<long>& integer_angles) {
  long total = 0;
  for (long v : integer_parts_of_nonint) total += v;
  for (long v : integer_angles) total += v - 1;
  return static_cast<int>(((total % 2) + 2) % 2);
}

SigmaOptions default_sigma_options() {
  SigmaOptions o;
  if (const char* env = std::getenv("SPHQUAD_SIGMA_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 10 && v <= 10000) o.digits = static_cast<unsigned>(v);
  }
  return o;
}

namespace {

// RAII holder for an mpfr_t
struct Mpfr {
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_t v;
};

void cos_pi(mpfr_t out, const mpfr_t pi, const Rational& t) {
  mpfr_mul_q(out, pi, t.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_cos(out, out, MPFR_RNDN);
}

}  // namespace

SigmaValue sigma_invariant(const Rational& theta, const Rational& theta1, const Rational& theta2,
                           long sigma_parity, const SigmaOptions& options) {
  const unsigned digits = options.digits == 0 ? 64 : options.digits;
  const auto prec = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623) + 32);
  Mpfr pi(prec), c0(prec), c1(prec), c2(prec), acc(prec), tmp(prec), band(prec);
  mpfr_const_pi(pi.v, MPFR_RNDN);
  cos_pi(c0.v, pi.v, theta);
  cos_pi(c1.v, pi.v, theta1);
  cos_pi(c2.v, pi.v, theta2);

  mpfr_sqr(acc.v, c0.v, MPFR_RNDN);
  mpfr_sqr(tmp.v, c1.v, MPFR_RNDN);
  mpfr_add(acc.v, acc.v, tmp.v, MPFR_RNDN);
  mpfr_sqr(tmp.v, c2.v, MPFR_RNDN);
  mpfr_add(acc.v, acc.v, tmp.v, MPFR_RNDN);
  mpfr_mul(tmp.v, c0.v, c1.v, MPFR_RNDN);
  mpfr_mul(tmp.v, tmp.v, c2.v, MPFR_RNDN);
  mpfr_mul_si(tmp.v, tmp.v, (sigma_parity % 2 == 0) ? 2 : -2, MPFR_RNDN);
  mpfr_add(acc.v, acc.v, tmp.v, MPFR_RNDN);

  // rounding residue below the working precision prints as zero
  mpfr_set_si(band.v, 10, MPFR_RNDN);
  mpfr_pow_si(band.v, band.v, -static_cast<long>(digits), MPFR_RNDN);
  if (mpfr_cmpabs(acc.v, band.v) < 0) mpfr_set_zero(acc.v, 1);

  SigmaValue out;
  out.approx = mpfr_get_d(acc.v, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), acc.v);
  out.decimal = buf;
  mpfr_free_str(buf);

  mpfr_sub_si(tmp.v, acc.v, 1, MPFR_RNDN);
  mpfr_set_si(band.v, 10, MPFR_RNDN);
  mpfr_pow_si(band.v, band.v, options.epsilon_exponent, MPFR_RNDN);
  if (mpfr_cmpabs(tmp.v, band.v) <= 0)
    out.compare_to_one = 0;
  else
    out.compare_to_one = mpfr_sgn(tmp.v) < 0 ? -1 : 1;
  return out;
}

const char* to_string(Unitarizable u) {
  switch (u) {
    case Unitarizable::yes: return "yes";
    case Unitarizable::no: return "no";
    case Unitarizable::boundary: return "boundary";
  }
  return "boundary";
}

UnitarizableResult unitarizable_generic(const HeunAngles& angles, const SigmaOptions& options) {
  UnitarizableResult res;
  res.sigma = sigma_invariant(angles.alpha1(), angles.alpha_a(), angles.alpha_inf(),
                              angles.alpha0() - 1, options);
  res.verdict = res.sigma.compare_to_one < 0   ? Unitarizable::yes
                : res.sigma.compare_to_one > 0 ? Unitarizable::no
                                               : Unitarizable::boundary;
  return res;
}

}  // namespace sphquad::heun
