#include "cuboid/factor.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cuboid;

TEST_CASE("squarefree_kernel examples") {
  CHECK(squarefree_kernel(Q("17/2")) == 34);
  CHECK(squarefree_kernel(Q("1")) == 1);
  CHECK(squarefree_kernel(Q("-1")) == 1);
  CHECK(squarefree_kernel(Q("4/9")) == 1);
  CHECK(squarefree_kernel(Q("12/5")) == 15);
  const Rational xi = Q("49/32");
  CHECK(squarefree_kernel(xi * (square(xi) - 1)) == 34);
  CHECK_ERRC(squarefree_kernel(Q("0")), Errc::trivial_input);
}

TEST_CASE("kernel times value is a square") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Rational r = random_rational(rng, 100000);
    const Integer k = squarefree_kernel(r);
    CHECK(is_square(abs(r) * Rational(k)));
  }
}

TEST_CASE("squarefree_part agrees with trial division") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> dist(1, 10'000'000'000ULL);
  for (std::uint64_t n = 1; n < 2000; ++n) {
    CHECK(squarefree_part(Integer(static_cast<unsigned long>(n))) == static_cast<unsigned long>(oracle::squarefree_trial(n)));
  }
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = dist(rng);
    CHECK(squarefree_part(Integer(static_cast<unsigned long>(n))) == static_cast<unsigned long>(oracle::squarefree_trial(n)));
  }
}

TEST_CASE("factorize") {
  auto f = factorize(Integer(360));
  CHECK(f == std::map<Integer, unsigned>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(Integer(-7)) == std::map<Integer, unsigned>{{7, 1}});
  CHECK(factorize(Integer(1)).empty());

  // Semiprime with both factors beyond the trial bound.
  const Integer p("1000000007"), q("998244353");
  auto g = factorize(p * q * p * 3);
  CHECK(g == std::map<Integer, unsigned>{{3, 1}, {q, 1}, {p, 2}});
  CHECK(squarefree_part(Integer(p * p * q)) == q);

  const Integer big_p("2147483647");  // 2^31 - 1
  const Integer big_q("4294967311");
  CHECK(squarefree_part(Integer(big_p * big_q * 4)) == big_p * big_q);
}

TEST_CASE("exhausted budget raises FactorizationExceeded") {
  FactorConfig tiny;
  tiny.trial_bound = 100;
  tiny.rho_iterations = 1;
  const Integer p("1000000007"), q("998244353");
  CHECK_ERRC(factorize(Integer(p * q), tiny), Errc::factorization_exceeded);
  CHECK_ERRC(squarefree_kernel(Rational(Integer(p * q)), tiny), Errc::factorization_exceeded);
  // Small inputs still fit the budget.
  CHECK(squarefree_kernel(Q("17/2"), tiny) == 34);
}
