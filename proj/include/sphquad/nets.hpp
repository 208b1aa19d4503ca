/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Combinatorial classes of nets of quadrilaterals with one integer corner.
//
// Corners are a0, a1, a2 (non-integer) and a3 (integer); sides L1..L4 join
// a0a1, a1a2, a2a3 and a3a0. Digons i, k, l, m sit on L1, L2, L3, L4.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sphquad::nets {

/// Declaration order is the preference order used by canonicalize.
enum class Family { X, Xbar, U, Ubar, V, Vbar, Z, R, Rbar, NablaE, NablaM, NablaMbar };

[[nodiscard]] const char* family_name(Family f);
[[nodiscard]] bool is_nabla(Family f);

/// Integer parts ([a0], [a1], [a2], a3).
struct IntegerParts {
  long A0 = 0, A1 = 0, A2 = 0, A3 = 1;

  friend auto operator<=>(const IntegerParts&, const IntegerParts&) = default;
  [[nodiscard]] std::string str() const;
  /// "A0,A1,A2,A3"; throws ParseError on malformed text, DomainError on A3 < 1
  /// or a negative entry.
  static IntegerParts parse(std::string_view text);
};

[[nodiscard]] IntegerParts reflect(const IntegerParts& p);

/// A primitive net (families X .. Rbar) or a nabla union decorated with
/// pseudo-diagonals (kappa) and digons. For the nabla families mu holds the
/// index n of the attached triangle E_n / M_n / Mbar_n, nu is unused (0) and
/// j is the multiplicity of the inserted digon D_j.
struct NetDescriptor {
  Family family = Family::X;
  long mu = 0, nu = 0, kappa = 0, j = 0;
  long i = 0, k = 0, l = 0, m = 0;

  friend auto operator<=>(const NetDescriptor&, const NetDescriptor&) = default;
};

enum class JunctionKind { TE, TM, ET, MbarT };  // T_j+E_n, T_j+M_n, E_j+T_n, Mbar_j+T_n

/// Union of two triangles (a degenerate position of the integer corner)
/// with D_{2 kappa} inserted and digons on the sides.
struct Junction {
  JunctionKind kind = JunctionKind::TE;
  long j = 0, n = 0, kappa = 0;
  long i = 0, k = 0, l = 0, m = 0;

  friend auto operator<=>(const Junction&, const Junction&) = default;
};

// ---- descriptors -----------------------------------------------------------

/// Integer parts of a net. Throws DomainError if the net is invalid.
[[nodiscard]] IntegerParts integer_parts(const NetDescriptor& net);
[[nodiscard]] IntegerParts integer_parts(const Junction& junction);

/// Empty when valid, otherwise one message per violated constraint.
[[nodiscard]] std::vector<std::string> validate(const NetDescriptor& net);
[[nodiscard]] std::vector<std::string> validate(const Junction& junction);

/// Maps notational aliases (U with nu = 0, V with mu = 0, ...) to their
/// standard family. Does not apply equivalence moves.
[[nodiscard]] NetDescriptor normalize(const NetDescriptor& net);

/// The equivalence class of a valid net under the reducible-quadrilateral
/// identities, sorted. Throws DomainError on an invalid net.
[[nodiscard]] std::vector<NetDescriptor> equivalence_class(const NetDescriptor& net);

/// Smallest member of the equivalence class; idempotent, preserves parts.
[[nodiscard]] NetDescriptor canonicalize(const NetDescriptor& net);
[[nodiscard]] Junction canonicalize(const Junction& junction);

/// Mirror image exchanging a0 with a2 (and L1 with L2, L3 with L4).
[[nodiscard]] NetDescriptor reflect(const NetDescriptor& net);
[[nodiscard]] Junction reflect(const Junction& junction);

// ---- text form -------------------------------------------------------------

/// e.g. "U[1,1]^1+D(i=0,k=1,l=0,m=0)", "nabla+E1+Dj(0)", "T1+E0^1+D(...)".
/// "^kappa" is omitted when kappa = 0 and "+D(...)" when all digons are 0.
[[nodiscard]] std::string to_string(const NetDescriptor& net);
[[nodiscard]] std::string to_string(const Junction& junction);

/// Inverse of to_string; throws ParseError.
[[nodiscard]] NetDescriptor parse_net(std::string_view text);
[[nodiscard]] Junction parse_junction(std::string_view text);

// ---- enumeration -----------------------------------------------------------

/// Every canonical net (primitive or nabla union) with the given parts, sorted.
[[nodiscard]] std::vector<NetDescriptor> enumerate_nets(const IntegerParts& parts);

/// Every canonical junction with the given parts, sorted.
[[nodiscard]] std::vector<Junction> enumerate_junctions(const IntegerParts& parts);

/// The two nets a junction sits between, normalized but not canonicalized.
[[nodiscard]] std::pair<NetDescriptor, NetDescriptor> adjacency(const Junction& junction);

// ---- chains ----------------------------------------------------------------

enum class ChainKind { aa, bb, ab };
[[nodiscard]] const char* to_string(ChainKind k);

struct Chain {
  std::vector<NetDescriptor> nets;     // Q_0 .. Q_n, canonical
  std::vector<Junction> junctions;     // junctions[t] joins nets[t] and nets[t+1]
  ChainKind kind = ChainKind::ab;

  [[nodiscard]] std::size_t length() const { return junctions.size(); }
};

struct ChainSet {
  std::vector<Chain> chains;
  /// Structural problems found while assembling (non-path components, shared
  /// junctions, chains with more than one U-type end). Empty in a healthy run.
  std::vector<std::string> violations;

  [[nodiscard]] std::size_t count(ChainKind k) const;
};

/// True when the class of the net contains U^kappa_{mu,nu} with min(i, l) = 0.
[[nodiscard]] bool is_aa_end(const NetDescriptor& net);
/// Mirror condition: Ubar^kappa_{mu,nu} with min(k, m) = 0.
[[nodiscard]] bool is_bb_end(const NetDescriptor& net);

/// Connected components of nets joined by junctions, each laid out as a path
/// starting at its lexicographically smaller terminal. Sorted by first net.
[[nodiscard]] ChainSet build_chains(const IntegerParts& parts);

// ---- counting --------------------------------------------------------------

/// How the inner quantity of the U-count is halved. The literal reading
/// divides by two both when defining delta and again inside the minimum.
enum class DeltaReading { literal, single_halving };

[[nodiscard]] long count_u_special(const IntegerParts& parts,
                                   DeltaReading reading = DeltaReading::literal);

/// A3 - 2 * count_u_special(parts).
[[nodiscard]] long lower_bound(const IntegerParts& parts,
                               DeltaReading reading = DeltaReading::literal);

/// A valid net with the requested parts. Throws DomainError if A3 < 1 or a
/// part is negative; InvariantError if the construction fails.
[[nodiscard]] NetDescriptor existence_witness(const IntegerParts& parts);

}  // namespace sphquad::nets
