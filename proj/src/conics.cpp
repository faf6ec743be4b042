#include "cuboid/conics.hpp"

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

void require_nontrivial(const Rational& t) {
  if (t.is_zero() || abs(t) == Rational(1)) {
    throw Error(Errc::trivial_parameter, "parameter t = " + t.str() + " is trivial");
  }
}

Rational checked_div(const Rational& num, const Rational& den, const Rational& t) {
  if (den.is_zero()) throw Error(Errc::trivial_parameter, "denominator vanishes at t = " + t.str());
  return num / den;
}

}  // namespace

ConicPoint circle_point(const Rational& t) {
  require_nontrivial(t);
  const Rational t2 = square(t);
  const Rational den = Rational(1) + t2;
  return {abs(Rational(1) - t2) / den, abs(Rational(2) * t) / den};
}

ConicPoint hyperbola_point_a(const Rational& t) {
  require_nontrivial(t);
  const Rational t2 = square(t);
  const Rational den = abs(Rational(1) - t2);
  return {(Rational(1) + t2) / den, abs(Rational(2) * t) / den};
}

ConicPoint hyperbola_point_b(const Rational& t) {
  require_nontrivial(t);
  const Rational t2 = square(t);
  const Rational den = abs(Rational(2) * t);
  return {(Rational(1) + t2) / den, abs(Rational(1) - t2) / den};
}

Rational theorem_equation_residual(Family family, const Rational& alpha, const Rational& beta,
                                   const Rational& gamma) {
  const Rational one(1);
  const Rational two(2);
  switch (family) {
    case Family::first: {
      auto term = [&](const Rational& t) { return square(two * t / (one + square(t))); };
      return term(alpha) + term(gamma) - term(beta);
    }
    case Family::second: {
      auto term = [&](const Rational& t) { return square(checked_div(two * t, one - square(t), t)); };
      return term(gamma) + term(beta) - term(alpha);
    }
    case Family::third: {
      auto term = [&](const Rational& t) { return square(checked_div(one - square(t), two * t, t)); };
      return term(gamma) + term(beta) - term(alpha);
    }
  }
  throw Error(Errc::trivial_parameter, "unknown family");
}

Rational third_to_second(const Rational& t) {
  const Rational one(1);
  return checked_div(one - t, one + t, t);
}

}  // namespace cuboid
