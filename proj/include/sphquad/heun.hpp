/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Accessory-parameter side of a spherical quadrilateral with one integer
// corner: the Heun equation with exponent difference alpha0 (an integer) at
// z = 0 and non-integer angles at z = 1, z = a and z = infinity.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sphquad/poly.hpp"
#include "sphquad/rational.hpp"

namespace sphquad::heun {

/// The four corner angles (in multiples of pi). alpha0 is the integer corner.
class HeunAngles {
 public:
  /// Throws DomainError unless alpha0 >= 1 and the other three angles are
  /// positive and non-integer.
  HeunAngles(long alpha0, Rational alpha1, Rational alpha_a, Rational alpha_inf);

  [[nodiscard]] long alpha0() const { return alpha0_; }
  [[nodiscard]] const Rational& alpha1() const { return alpha1_; }
  [[nodiscard]] const Rational& alpha_a() const { return alpha_a_; }
  [[nodiscard]] const Rational& alpha_inf() const { return alpha_inf_; }

  friend bool operator==(const HeunAngles&, const HeunAngles&) = default;

 private:
  long alpha0_;
  Rational alpha1_, alpha_a_, alpha_inf_;
};

/// Angles plus the position a of the fourth singular point.
class HeunParams {
 public:
  /// Throws DomainError when a is 0 or 1.
  HeunParams(HeunAngles angles, Rational a);

  [[nodiscard]] const HeunAngles& angles() const { return angles_; }
  [[nodiscard]] const Rational& a() const { return a_; }

 private:
  HeunAngles angles_;
  Rational a_;
};

/// Symmetric functions of the two exponents at infinity: their sum and product.
/// Both are rational even when the exponents themselves are not.
struct ExponentData {
  Rational sum;
  Rational product;
};

[[nodiscard]] ExponentData exponent_data(const HeunAngles& angles);

/// Coefficients of the three-term recurrence for the power series at z = 0.
struct Recurrence {
  Rational r;
  Rational q;
  Rational p;
};

[[nodiscard]] Recurrence recurrence_coefficients(const HeunParams& params, long n);

/// The no-logarithm condition at z = 0 as a polynomial in the accessory
/// parameter; degree exactly alpha0. For alpha0 = 1 this is lambda itself.
[[nodiscard]] Poly accessory_polynomial(const HeunParams& params);

/// Tridiagonal matrix whose characteristic polynomial is the accessory
/// polynomial. Row n holds sub[n-1], diag[n], super[n].
struct JacobiMatrix {
  std::vector<Rational> sub;    // p_1 .. p_{n}
  std::vector<Rational> diag;   // -q_0 .. -q_{n}
  std::vector<Rational> super;  // r_0 .. r_{n-1}

  [[nodiscard]] std::size_t dimension() const { return diag.size(); }
  /// Dense entry access, zero off the three diagonals.
  [[nodiscard]] Rational at(std::size_t row, std::size_t col) const;
};

[[nodiscard]] JacobiMatrix jacobi_matrix(const HeunParams& params);

/// Signature bound on non-real eigenvalue pairs of the Jacobi matrix.
struct PontryaginResult {
  bool defined = false;           // false when some p_j vanishes
  std::vector<int> signs;         // signs of the symmetrizer s_0 .. s_n
  std::size_t positive = 0;       // P
  std::size_t negative = 0;       // N
  std::size_t max_nonreal_pairs = 0;  // min(P, N)
  bool all_real_simple = false;   // r_j p_{j+1} > 0 for every j

  /// alpha0 - 2 * max_nonreal_pairs, the guaranteed number of real roots.
  [[nodiscard]] long real_lower_bound(long alpha0) const {
    return alpha0 - 2 * static_cast<long>(max_nonreal_pairs);
  }
};

[[nodiscard]] PontryaginResult pontryagin_bound(const HeunParams& params);

/// Eigenvalues of the Jacobi matrix in the a -> 0 limit, j = 0 .. alpha0-1.
[[nodiscard]] std::vector<Rational> limit_spectrum_a0(const HeunAngles& angles);

/// Parity of the sum of integer parts over non-integer corners plus
/// (angle - 1) over integer corners.
[[nodiscard]] int sigma0_parity(const std::vector<long>& integer_parts_of_nonint,
                                const std::vector<long>& integer_angles);

struct SigmaOptions {
  unsigned digits = 64;        // decimal digits of working precision
  int epsilon_exponent = -40;  // boundary band |Sigma - 1| <= 10^epsilon_exponent
};

/// Reads SPHQUAD_SIGMA_DIGITS for the default precision, falling back to 64.
[[nodiscard]] SigmaOptions default_sigma_options();

/// High-precision value of the three-circle invariant.
struct SigmaValue {
  std::string decimal;  // rendered with the working precision
  double approx = 0.0;
  int compare_to_one = 0;  // -1, 0 (inside the boundary band), +1
};

[[nodiscard]] SigmaValue sigma_invariant(const Rational& theta, const Rational& theta1,
                                         const Rational& theta2, long sigma_parity,
                                         const SigmaOptions& options = {});

enum class Unitarizable { yes, no, boundary };

[[nodiscard]] const char* to_string(Unitarizable u);

struct UnitarizableResult {
  Unitarizable verdict = Unitarizable::boundary;
  SigmaValue sigma;
};

/// Sigma over the three non-integer angles with parity alpha0 - 1.
[[nodiscard]] UnitarizableResult unitarizable_generic(const HeunAngles& angles,
                                                      const SigmaOptions& options = {});

}  // namespace sphquad::heun
