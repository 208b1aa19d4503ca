/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sphquad/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "sphquad/error.hpp"

namespace sphquad {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string buf(s);
  if (!buf.empty() && buf.front() == '+') buf.erase(0, 1);
  return mpz_class(buf, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw ParseError("not an exact rational (expected p/q or p): '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return q_.get_den() == 1 ? q_.get_num().get_str() : q_.get_str();
}

std::string Rational::numerator_str() const { return q_.get_num().get_str(); }
std::string Rational::denominator_str() const { return q_.get_den().get_str(); }

bool Rational::is_integer() const { return q_.get_den() == 1; }

long Rational::floor_long() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("floor does not fit in long");
  return f.get_si();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::frac() const { return *this - Rational(floor_long()); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sphquad
