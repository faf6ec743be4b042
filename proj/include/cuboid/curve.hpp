#pragma once

/*
 * The congruent curve C_N : y^2 = x^3 - N^2 x.
 *
 * Group law sign convention: the standard chord-and-tangent law with the
 * point at infinity as identity and negation (x, y) -> (x, -y). The three
 * "reflections" are the third intersection points of the secants through
 * the 2-torsion points (0,0), (N,0), (-N,0); in group-law terms
 * reflect_i(P) = -(P + T_i). Their x-coordinates are sign independent; y
 * signs only ever enter cuboid formulas through |YW|.
 */

#include <cstdint>
#include <optional>
#include <tuple>

#include "cuboid/rational.hpp"

namespace cuboid {

class CurveParams {
 public:
  /// Throws Error(trivial_input) unless n >= 1.
  explicit CurveParams(Integer n);

  const Integer& N() const { return n_; }
  Rational n_squared() const { return Rational(Integer(n_ * n_)); }

  friend bool operator==(const CurveParams& a, const CurveParams& b) { return a.n_ == b.n_; }

 private:
  Integer n_;
};

class CurvePoint {
 public:
  static CurvePoint infinity(CurveParams curve) { return CurvePoint(std::move(curve)); }
  /// No curve check here; use on_curve().
  static CurvePoint affine(CurveParams curve, Rational x, Rational y) {
    return CurvePoint(std::move(curve), std::move(x), std::move(y));
  }

  const CurveParams& curve() const { return curve_; }
  bool is_infinity() const { return !coords_.has_value(); }
  /// Affine y == 0: one of (0,0), (N,0), (-N,0) when on the curve.
  bool is_trivial() const { return !is_infinity() && y().is_zero(); }

  /// Precondition: affine.
  const Rational& x() const { return coords_->x; }
  const Rational& y() const { return coords_->y; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);

 private:
  struct Coords {
    Rational x;
    Rational y;
  };

  explicit CurvePoint(CurveParams curve) : curve_(std::move(curve)) {}
  CurvePoint(CurveParams curve, Rational x, Rational y)
      : curve_(std::move(curve)), coords_(Coords{std::move(x), std::move(y)}) {}

  CurveParams curve_;
  std::optional<Coords> coords_;
};

/// x^3 - N^2 x
Rational curve_rhs(const CurveParams& curve, const Rational& x);

bool on_curve(const CurvePoint& p);

CurvePoint negate(const CurvePoint& p);

/// Chord-and-tangent sum. Throws Error(curve_mismatch).
CurvePoint add(const CurvePoint& p, const CurvePoint& q);

/// Tangent doubling; 2-torsion and infinity double to infinity.
CurvePoint double_point(const CurvePoint& p);

/// k-fold sum by binary double-and-add; mul(0, p) is infinity and
/// mul(-k, p) = negate(mul(k, p)).
CurvePoint mul(std::int64_t k, const CurvePoint& p);

/// y-intercept of the line through two affine points with distinct x.
/// Throws Error(vertical_secant) if the x-coordinates coincide,
/// Error(trivial_input) for infinity, Error(curve_mismatch).
Rational secant_y_intercept(const CurvePoint& p, const CurvePoint& q);

/// (X, Y) -> (-N^2/X, -N^2 Y/X^2). Throws Error(trivial_input) at x = 0 or infinity.
CurvePoint reflect_first(const CurvePoint& p);
/// (X, Y) -> (N(X+N)/(X-N), 2N^2 Y/(X-N)^2). Throws Error(trivial_input) at x = N.
CurvePoint reflect_second(const CurvePoint& p);
/// (X, Y) -> (N(N-X)/(X+N), 2N^2 Y/(X+N)^2). Throws Error(trivial_input) at x = -N.
CurvePoint reflect_third(const CurvePoint& p);

/// Two nontrivial points (X, Y), (Z, W) on one curve with X != Z and X*Z a
/// rational square. Only constructible through make().
class SolutionPair {
 public:
  /// Validates every invariant. Throws Error(curve_mismatch),
  /// Error(not_on_curve) or Error(degenerate_pair).
  static SolutionPair make(const CurvePoint& p, const CurvePoint& q);

  const CurveParams& curve() const { return p_.curve(); }
  const Integer& N() const { return p_.curve().N(); }
  const CurvePoint& p() const { return p_; }
  const CurvePoint& q() const { return q_; }
  const Rational& X() const { return p_.x(); }
  const Rational& Y() const { return p_.y(); }
  const Rational& Z() const { return q_.x(); }
  const Rational& W() const { return q_.y(); }

  friend bool operator==(const SolutionPair& a, const SolutionPair& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  SolutionPair(CurvePoint p, CurvePoint q) : p_(std::move(p)), q_(std::move(q)) {}

  CurvePoint p_;
  CurvePoint q_;
};

/// (kP, mP) for same-parity k != m. Throws Error(degenerate_pair) when a
/// precondition fails and Error(square_check_failed) if the x-product is
/// not a square.
SolutionPair same_parity_pair(const CurvePoint& p, std::int64_t k, std::int64_t m);

/// Apply one reflection to both points of a pair.
SolutionPair reflect_pair_first(const SolutionPair& pair);
SolutionPair reflect_pair_second(const SolutionPair& pair);
SolutionPair reflect_pair_third(const SolutionPair& pair);

struct KummerPoint {
  Rational xi;
  Rational zeta;
  Rational eta;
};

/// (X/N, Z/N, YW/N^3)
KummerPoint kummer_map(const SolutionPair& pair);

/// eta^2 == xi zeta (xi^2 - 1)(zeta^2 - 1)
bool kummer_identity_holds(const KummerPoint& k);

}  // namespace cuboid
