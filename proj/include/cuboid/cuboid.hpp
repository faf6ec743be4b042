#pragma once

/*
 * Nearly-perfect cuboids built from solution pairs on C_N.
 *
 * A Cuboid holds three sides, the two rational face diagonals d_bc and d_ac,
 * the space diagonal d_s, and the exact square d_ab_sq = a^2 + b^2 of the
 * remaining face diagonal. Every parametrization leaves d_ab as the only
 * quantity that may be irrational, so the perfect-cuboid condition is simply
 * is_square(d_ab_sq).
 *
 * Five parametrizations are provided. Each is a ratio system (to d_s for the
 * first family, to a for the others); build_npc evaluates the ratios exactly
 * and presents the result as coprime positive integers.
 */

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cuboid/conics.hpp"
#include "cuboid/curve.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

enum class Parametrization { first, first_reflected, second, second_reflected, invariant };

inline constexpr std::array<Parametrization, 5> kAllParametrizations{
    Parametrization::first, Parametrization::first_reflected, Parametrization::second,
    Parametrization::second_reflected, Parametrization::invariant};

std::string_view to_string(Parametrization p);
std::optional<Parametrization> parse_parametrization(std::string_view name);

struct Cuboid {
  Rational a, b, c;
  Rational d_bc, d_ac, d_s;
  Rational d_ab_sq;

  /// Fills d_ab_sq = a^2 + b^2.
  static Cuboid from_edges(Rational a, Rational b, Rational c, Rational d_ac, Rational d_bc, Rational d_s);

  /// (a, b, c, d_ac, d_bc, d_s), the order used for printed cuboids.
  std::array<Rational, 6> edges() const { return {a, b, c, d_ac, d_bc, d_s}; }

  friend bool operator==(const Cuboid&, const Cuboid&) = default;
};

/// Coprime positive-integer representative of the same shape; d_ab_sq is
/// recomputed after scaling.
Cuboid normalized(const Cuboid& cuboid);

/// The same box with a and b interchanged (so d_ac and d_bc swap too).
Cuboid swap_ab(const Cuboid& cuboid);

/// Unvalidated pair data. build_npc and variables_from_pair accept this so
/// the degenerate-denominator paths are reachable; real callers go through
/// SolutionPair.
struct PairValues {
  Integer N;
  Rational X, Y, Z, W;

  static PairValues of(const SolutionPair& pair);
};

struct ParametrizationVariables {
  Family family;
  Rational alpha;
  Rational beta;
  /// gamma/(1+gamma^2), gamma/(1-gamma^2) or (1-gamma^2)/gamma for the
  /// first, second and third family. gamma itself is rational only for a
  /// perfect cuboid; this quotient always is.
  Rational gamma_condition;
  Rational eta;
};

/// Throws Error(degenerate_pair) if XZ is not a square or a denominator of
/// the family's closed form vanishes.
ParametrizationVariables variables_from_pair(const PairValues& values, Family family);
ParametrizationVariables variables_from_pair(const SolutionPair& pair, Family family);

/// Throws Error(degenerate_pair) on vanishing denominators and
/// Error(zero_side) if an entry evaluates to zero.
Cuboid build_npc(const PairValues& values, Parametrization parametrization);
Cuboid build_npc(const SolutionPair& pair, Parametrization parametrization);

/// True iff d_ab is rational, i.e. the box is a perfect cuboid.
bool pc_condition(const Cuboid& cuboid);

enum class Relation { face_ab, face_bc, face_ac, space_diagonal };

std::string_view to_string(Relation r);

/// The equations among a^2+b^2=d_ab^2, b^2+c^2=d_bc^2, a^2+c^2=d_ac^2 and
/// a^2+b^2+c^2=d_s^2 that fail.
std::vector<Relation> verify_npc(const Cuboid& cuboid);

}  // namespace cuboid
