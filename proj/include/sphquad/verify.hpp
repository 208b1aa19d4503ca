/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Cross-checks between the accessory polynomial and the net counts.

#include <cstddef>
#include <string>
#include <vector>

#include "sphquad/heun.hpp"
#include "sphquad/nets.hpp"
#include "sphquad/rational.hpp"

namespace sphquad::verify {

/// Where a sits relative to 0 and 1.
enum class Position { negative, unit, above };  // a < 0, 0 < a < 1, a > 1

[[nodiscard]] const char* to_string(Position p);
/// Throws DomainError for a in {0, 1}.
[[nodiscard]] Position position_of(const Rational& a);
/// Accepts "negative", "unit", "above".
[[nodiscard]] Position parse_position(const std::string& text);

/// Which Heun angle sits at each non-integer net corner.
enum class HeunCorner { one, a, inf };

struct CornerAssignment {
  HeunCorner a0, a1, a2;  // a1 is the corner opposite the integer corner
};

/// The assignment forced by the cyclic order of 0, 1, a, infinity.
[[nodiscard]] CornerAssignment correspondence(Position p);

[[nodiscard]] nets::IntegerParts parts_from_assignment(const heun::HeunAngles& angles,
                                                       const CornerAssignment& map);

/// parts_from_assignment(angles, correspondence(position)).
[[nodiscard]] nets::IntegerParts parts_from_heun(const heun::HeunAngles& angles, Position position);

struct VerifyRow {
  Rational a;
  Position position = Position::unit;
  long alpha0 = 0;
  nets::IntegerParts parts;
  std::size_t real_distinct = 0;
  std::size_t real_with_multiplicity = 0;
  bool pontryagin_defined = false;
  long pontryagin_lb = 0;     // alpha0 - 2 min(P, N), when defined
  long combinatorial_lb = 0;  // lower_bound(parts)
  heun::Unitarizable unitarizable = heun::Unitarizable::boundary;

  bool upper_ok = true;        // count <= alpha0
  bool parity_ok = true;       // count = alpha0 mod 2
  bool combinatorial_ok = true;  // lower_bound <= count (checked only when unitarizable)
  bool pontryagin_ok = true;     // pontryagin_lb <= count when defined
  bool inconclusive = false;     // sigma inside the boundary band

  [[nodiscard]] bool passed() const {
    return inconclusive || (upper_ok && parity_ok && combinatorial_ok && pontryagin_ok);
  }
};

struct VerifyReport {
  std::string angles;  // "alpha0,alpha1,alpha_a,alpha_inf"
  std::string sigma;   // decimal value
  std::vector<VerifyRow> rows;

  [[nodiscard]] std::size_t failures() const;
  [[nodiscard]] std::size_t inconclusive() const;
};

/// Evaluates every sample in order. Throws DomainError if a sample is 0 or 1.
[[nodiscard]] VerifyReport cross_validate(const heun::HeunAngles& angles,
                                          const std::vector<Rational>& samples,
                                          const heun::SigmaOptions& sigma = {});

/// n rational moduli of the given position class, denominators at most n+1.
[[nodiscard]] std::vector<Rational> sample_grid(Position p, std::size_t n);

/// Fixed pseudo-random suite of angle sets: alpha0 = 2..6, five sets each,
/// non-integer angles p/q with q in {2,3,4,5,10} below 2, all with sigma < 1.
[[nodiscard]] std::vector<heun::HeunAngles> default_angle_grid();

/// One JSON object per row, newline terminated.
[[nodiscard]] std::string to_jsonl(const VerifyReport& report);
/// Fixed-width table plus a totals line.
[[nodiscard]] std::string summary_table(const std::vector<VerifyReport>& reports);

/// Small-modulus regime: are all alpha0 roots real at this a, and does each
/// isolating interval fit inside [L - tol, L + tol] around the matching limit
/// eigenvalue L, tol = tolerance_factor * |a|?
struct LimitCheck {
  bool all_real = false;
  bool within_tolerance = false;
  /// Upper estimate of max |root - L| / |a| from the isolating intervals.
  double max_scaled_deviation = 0.0;
};

[[nodiscard]] LimitCheck limit_check(const heun::HeunAngles& angles, const Rational& a,
                                     const Rational& tolerance_factor);

}  // namespace sphquad::verify
