#pragma once

#include "cuboid/rational.hpp"

namespace cuboid {

/// The three rational parametrization families of the perfect-cuboid
/// equations: circle (first), hyperbola 2t/(1-t^2) (second) and hyperbola
/// (1-t^2)/(2t) (third).
enum class Family { first = 1, second = 2, third = 3 };

struct ConicPoint {
  Rational x;
  Rational y;
};

/// Positive point on x^2 + y^2 = 1: (|1-t^2|/(1+t^2), |2t|/(1+t^2)).
/// Throws Error(trivial_parameter) for t in {0, 1, -1}.
ConicPoint circle_point(const Rational& t);

/// Positive point on x^2 - y^2 = 1: (|1+t^2|/|1-t^2|, |2t|/|1-t^2|).
ConicPoint hyperbola_point_a(const Rational& t);

/// Positive point on x^2 - y^2 = 1: (|1+t^2|/|2t|, |1-t^2|/|2t|).
ConicPoint hyperbola_point_b(const Rational& t);

/// Left side minus right side of the family's cuboid equation
///   first:  (2a/(1+a^2))^2 + (2g/(1+g^2))^2 - (2b/(1+b^2))^2
///   second: (2g/(1-g^2))^2 + (2b/(1-b^2))^2 - (2a/(1-a^2))^2
///   third:  ((1-g^2)/(2g))^2 + ((1-b^2)/(2b))^2 - ((1-a^2)/(2a))^2
/// Throws Error(trivial_parameter) when a denominator vanishes (t = +-1 for
/// the second family, t = 0 for the third; never for the first).
Rational theorem_equation_residual(Family family, const Rational& alpha, const Rational& beta,
                                   const Rational& gamma);

/// t -> (1-t)/(1+t): carries third-family parameters to second-family ones.
/// Throws Error(trivial_parameter) at t = -1.
Rational third_to_second(const Rational& t);

}  // namespace cuboid
