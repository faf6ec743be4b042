#include "cuboid/conics.hpp"
#include "helpers.hpp"

using namespace cuboid;

TEST_CASE("conic points") {
  const ConicPoint c = circle_point(Q("1/2"));
  CHECK(c.x == Q("3/5"));
  CHECK(c.y == Q("4/5"));
  const ConicPoint c2 = circle_point(Q("2"));
  CHECK(c2.x == Q("3/5"));
  CHECK(c2.y == Q("4/5"));
  CHECK(square(c.x) + square(c.y) == 1);

  const ConicPoint h = hyperbola_point_a(Q("1/2"));
  CHECK(h.x == Q("5/3"));
  CHECK(h.y == Q("4/3"));
  const ConicPoint g = hyperbola_point_b(Q("1/2"));
  CHECK(g.x == Q("5/4"));
  CHECK(g.y == Q("3/4"));

  for (const char* bad : {"0", "1", "-1"}) {
    CHECK_ERRC(circle_point(Q(bad)), Errc::trivial_parameter);
    CHECK_ERRC(hyperbola_point_a(Q(bad)), Errc::trivial_parameter);
    CHECK_ERRC(hyperbola_point_b(Q(bad)), Errc::trivial_parameter);
  }
}

TEST_CASE("conic points stay on their conics") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational t = random_rational(rng, 500);
    if (t.is_zero() || abs(t) == Rational(1)) continue;
    const ConicPoint c = circle_point(t), a = hyperbola_point_a(t), b = hyperbola_point_b(t);
    CHECK(square(c.x) + square(c.y) == 1);
    CHECK(square(a.x) - square(a.y) == 1);
    CHECK(square(b.x) - square(b.y) == 1);
    CHECK(c.x.sign() >= 0);
    CHECK(a.y.sign() > 0);
    CHECK(b.x.sign() > 0);
  }
}

TEST_CASE("residual denominators") {
  CHECK_ERRC(theorem_equation_residual(Family::second, Q("1"), Q("1/2"), Q("1/3")), Errc::trivial_parameter);
  CHECK_ERRC(theorem_equation_residual(Family::second, Q("1/2"), Q("-1"), Q("1/3")), Errc::trivial_parameter);
  CHECK_ERRC(theorem_equation_residual(Family::third, Q("1/2"), Q("1/3"), Q("0")), Errc::trivial_parameter);
  CHECK_ERRC(third_to_second(Q("-1")), Errc::trivial_parameter);
  // The first family has no poles over the rationals.
  CHECK_NOTHROW(theorem_equation_residual(Family::first, Q("0"), Q("1"), Q("-1")));
  CHECK(theorem_equation_residual(Family::first, Q("1/2"), Q("1/3"), Q("1/5")) != 0);
}

TEST_CASE("degenerate zeros of the third family map to zeros of the second") {
  const std::vector<Rational> alphas{Q("1/2"), Q("3/7"), Q("5"), Q("-11/13"), Q("41/24")};
  for (const auto& a : alphas) {
    for (const Rational& b : {a, -a, reciprocal(a), -reciprocal(a)}) {
      const Rational gamma(1);
      CHECK(theorem_equation_residual(Family::third, a, b, gamma) == 0);
      CHECK(theorem_equation_residual(Family::second, third_to_second(a), third_to_second(b),
                                      third_to_second(gamma)) == 0);
    }
  }
}

TEST_CASE("third-to-second map preserves the residual exactly") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 200) {
    const Rational a = random_rational(rng, 200), b = random_rational(rng, 200), g = random_rational(rng, 200);
    if (a == Rational(-1) || b == Rational(-1) || g == Rational(-1)) continue;
    const Rational r3 = theorem_equation_residual(Family::third, a, b, g);
    const Rational r2 =
        theorem_equation_residual(Family::second, third_to_second(a), third_to_second(b), third_to_second(g));
    CHECK(r2 == r3);
    ++checked;
  }
  CHECK(third_to_second(Q("1/3")) == Q("1/2"));
  CHECK(third_to_second(third_to_second(Q("7/5"))) == Q("7/5"));
}
