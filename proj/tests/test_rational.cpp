#include <sstream>

#include "cuboid/rational.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cuboid;

TEST_CASE("rationals are kept in canonical form") {
  CHECK(Q("6/-4").str() == "-3/2");
  CHECK(Q("-10/5").str() == "-2");
  CHECK(Q("0/7").str() == "0");
  CHECK(Q("+12").str() == "12");
  CHECK(Q("4/6") == Q("2/3"));
  CHECK(Q("4/6").num() == 2);
  CHECK(Q("4/6").den() == 3);
  CHECK(Q("-1/3") < Q("1/4"));
  CHECK(Q("123456789012345678901234567890/10").str() == "12345678901234567890123456789");

  CHECK_ERRC(Q("1/0"), Errc::division_by_zero);
  CHECK_ERRC(Q("1.5"), Errc::parse_error);
  CHECK_ERRC(Q(""), Errc::parse_error);
  CHECK_ERRC(Q("3/"), Errc::parse_error);
  CHECK_ERRC(Q("1") / Q("0"), Errc::division_by_zero);
}

TEST_CASE("arithmetic") {
  CHECK(Q("1/2") + Q("1/3") == Q("5/6"));
  CHECK(Q("1/2") - Q("1/3") == Q("1/6"));
  CHECK(Q("2/3") * Q("9/4") == Q("3/2"));
  CHECK(Q("2/3") / Q("-4/9") == Q("-3/2"));
  CHECK(-Q("2/3") == Q("-2/3"));
  CHECK(abs(Q("-7/2")) == Q("7/2"));
  CHECK(reciprocal(Q("-7/2")) == Q("-2/7"));
  std::ostringstream os;
  os << Q("10/4");
  CHECK(os.str() == "5/2");
}

TEST_CASE("approx is a truncated decimal rendering") {
  CHECK(Q("1/3").approx(4) == "0.3333");
  CHECK(Q("-25/4").approx(3) == "-6.250");
  CHECK(Q("1681/144").approx(2) == "11.67");
  CHECK(Q("-1/8").approx(2) == "-0.12");
  CHECK(Q("7").approx(0) == "7");
}

TEST_CASE("decimal_digits") {
  CHECK(decimal_digits(Integer(0)) == 1);
  CHECK(decimal_digits(Integer(9)) == 1);
  CHECK(decimal_digits(Integer(10)) == 2);
  CHECK(decimal_digits(Integer(-99999)) == 5);
  CHECK(decimal_digits(Integer("100000000000000000000")) == 21);
}

TEST_CASE("is_square") {
  CHECK(is_square(Q("42025/576")));
  CHECK(Q("25/4") * Q("1681/144") == Q("42025/576"));
  CHECK(is_square(Q("0")));
  CHECK_FALSE(is_square(Q("-25")));
  CHECK_FALSE(is_square(Q("2")));
  CHECK_FALSE(is_square(Q("4/3")));
  CHECK(is_square(Q("49/9")));
}

TEST_CASE("sqrt_exact") {
  // Oracle: integer square roots by bisection.
  CHECK(oracle::isqrt_bisect(Integer(42025)) == 205);
  CHECK(oracle::isqrt_bisect(Integer(576)) == 24);
  CHECK(sqrt_exact(Q("42025/576")) == Q("205/24"));
  CHECK(sqrt_exact(Q("1")) == Q("1"));
  CHECK(sqrt_exact(Q("0")) == Q("0"));
  CHECK_ERRC(sqrt_exact(Q("2")), Errc::not_a_square);
  CHECK_ERRC(sqrt_exact(Q("-4")), Errc::not_a_square);
}

TEST_CASE("primitive_integer_scaling") {
  auto scale = [](std::vector<Rational> v) { return primitive_integer_scaling(v); };
  CHECK(scale({Q("1/2"), Q("1/3")}) == std::vector<Integer>{3, 2});
  CHECK(scale({Q("3"), Q("6"), Q("9")}) == std::vector<Integer>{1, 2, 3});
  CHECK(scale({Q("0"), Q("4/7")}) == std::vector<Integer>{0, 1});
  CHECK_ERRC(scale({Q("0"), Q("0")}), Errc::trivial_input);

  // First-parametrization ratios to d_s from the N = 5 worked example.
  const std::vector<long> expected{5079408, 1762717, 2242044, 5552220, 2852005, 5825317};
  std::vector<Rational> ratios;
  for (long v : expected) ratios.emplace_back(Integer(v), Integer(5825317));
  CHECK(ratios[0] == Q("1968/2257"));
  CHECK(ratios[1] == Q("781/2581"));
  const auto ints = primitive_integer_scaling(ratios);
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(ints[i] == expected[i]);
}

TEST_CASE("properties over random rationals") {
  std::mt19937_64 rng(20261017);
  for (int iter = 0; iter < 300; ++iter) {
    const Rational r = random_rational(rng);
    const Rational s = random_rational(rng);
    const Rational r2 = square(r), s2 = square(s);

    CHECK(is_square(r2));
    CHECK(sqrt_exact(r2) == abs(r));
    CHECK(square(sqrt_exact(r2)) == r2);
    CHECK(is_square(r2 * s2));
    if (is_square(abs(r)) && is_square(abs(s))) CHECK(is_square(abs(r) * abs(s)));

    // Scaling is invariant under a positive multiplier.
    std::vector<Rational> v{abs(r), abs(s), abs(r * s)};
    std::vector<Rational> w;
    const Rational k = abs(random_rational(rng));
    for (const auto& x : v) w.push_back(x * k);
    const auto sv = primitive_integer_scaling(v);
    CHECK(sv == primitive_integer_scaling(w));
    // Ratios preserved exactly.
    CHECK(Rational(sv[0], sv[1]) == abs(r) / abs(s));
  }
}
