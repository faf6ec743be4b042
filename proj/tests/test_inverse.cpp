#include "cuboid/inverse.hpp"
#include "helpers.hpp"

using namespace cuboid;

namespace {

const Cuboid kExample = Cuboid::from_edges(672, 153, 104, 680, 185, 697);

void check_pair(const RecoveredPair& p, const Integer& N, const char* x, const char* z) {
  CHECK(p.X == Q(x));
  CHECK(p.Z == Q(z));
  const CurveParams curve(N);
  CHECK(p.Y == sqrt_exact(curve_rhs(curve, p.X)));
  CHECK(p.W == sqrt_exact(curve_rhs(curve, p.Z)));
}

std::vector<SolutionPair> sample_pairs() {
  std::vector<SolutionPair> out;
  const CurveParams c5(5), c6(6), c7(7), c34(34);
  for (const auto& seed : {CurvePoint::affine(c5, -4, 6), CurvePoint::affine(c6, -3, 9),
                           CurvePoint::affine(c7, 25, 120), CurvePoint::affine(c34, -2, 48)}) {
    for (int k = 1; k <= 3; ++k) out.push_back(same_parity_pair(seed, k, k + 2));
  }
  return out;
}

}  // namespace

TEST_CASE("invariant inversion of the worked cuboid") {
  const RecoveredSolutions r = recover_invariant(kExample);
  CHECK(r.N == 34);
  CHECK_FALSE(r.perfect);
  check_pair(r.pairs[0], 34, "833/16", "153/4");
  check_pair(r.pairs[1], 34, "-1088/49", "-272/9");
  check_pair(r.pairs[2], 34, "162", "578");
  check_pair(r.pairs[3], 34, "-578/81", "-2");
  CHECK(r.pairs[0].Y == Q("18207/64"));
  CHECK(r.pairs[0].W == Q("867/8"));
  CHECK(r.pairs[2].which == PairLabel::III);

  for (int i = 0; i < 4; ++i) {
    const SolutionPair pair = to_solution_pair(r.N, r.pairs[i]);
    const Cuboid rebuilt = build_npc(pair, Parametrization::invariant);
    CHECK(rebuilt == (i < 2 ? kExample : swap_ab(kExample)));
  }
}

TEST_CASE("first-family inversion of the worked cuboid") {
  const FamilyRecovery r = recover_first(kExample);
  CHECK(r.parametrization == Parametrization::first);
  CHECK(r.N == 4305);
  check_pair(r.pair, 4305, "452025/64", "18081/4");
  check_pair(r.reflected, 4305, "-2624", "-4100");
  CHECK(build_npc(to_solution_pair(r.N, r.pair), Parametrization::first) == kExample);
}

TEST_CASE("second-family inversion of the worked cuboid") {
  const FamilyRecovery r = recover_second(kExample);
  CHECK(r.parametrization == Parametrization::second);
  CHECK(r.N == 1717170);
  check_pair(r.pair, 1717170, "165191754", "3016650");
  check_pair(r.reflected, 1717170, "-17850", "-977466");
  CHECK(build_npc(to_solution_pair(r.N, r.pair), Parametrization::second) == kExample);
}

TEST_CASE("inversion rejects non-cuboids") {
  CHECK_ERRC(recover_invariant(Cuboid::from_edges(672, 153, 104, 680, 185, 698)), Errc::not_an_npc);
  CHECK_ERRC(recover_first(Cuboid::from_edges(672, 153, 104, 680, 185, 698)), Errc::not_an_npc);
  CHECK_ERRC(recover_second(Cuboid::from_edges(-672, 153, 104, 680, 185, 697)), Errc::not_an_npc);
  CHECK_ERRC(recover_invariant(Cuboid::from_edges(0, 153, 104, 680, 185, 697)), Errc::not_an_npc);
}

TEST_CASE("inversion round-trips generated cuboids") {
  for (const auto& pair : sample_pairs()) {
    const Cuboid inv = build_npc(pair, Parametrization::invariant);
    const RecoveredSolutions r = recover_invariant(inv);
    CHECK(r.N == pair.N());
    CHECK(build_npc(to_solution_pair(r.N, r.pairs[0]), Parametrization::invariant) == inv);
    CHECK(r.pairs[0].X > r.pairs[0].Z);
    CHECK(r.pairs[0].Z.sign() > 0);
    // The generating pair's x-coordinates are among the four recovered pairs, up to order.
    bool found = false;
    for (const auto& p : r.pairs) {
      if ((p.X == pair.X() && p.Z == pair.Z()) || (p.X == pair.Z() && p.Z == pair.X())) found = true;
    }
    CHECK(found);

    const Cuboid first = build_npc(pair, Parametrization::first);
    const FamilyRecovery f = recover_first(first);
    CHECK(f.N == pair.N());
    CHECK(build_npc(to_solution_pair(f.N, f.pair), Parametrization::first) == first);

    const Cuboid second = build_npc(pair, Parametrization::second);
    const FamilyRecovery s = recover_second(second);
    CHECK(s.N == pair.N());
    CHECK(build_npc(to_solution_pair(s.N, s.pair), Parametrization::second) == second);
  }
}

TEST_CASE("labelling unordered sides") {
  const auto q = label_npc({Rational(672), Rational(153), Rational(104)});
  REQUIRE(q.has_value());
  CHECK(*q == kExample);
  const auto permuted = label_npc({Rational(104), Rational(672), Rational(153)});
  REQUIRE(permuted.has_value());
  CHECK(*permuted == kExample);
  CHECK_FALSE(label_npc({Rational(1), Rational(2), Rational(3)}).has_value());
  CHECK_FALSE(label_npc({Rational(-672), Rational(153), Rational(104)}).has_value());
  CHECK(to_string(PairLabel::IV) == "IV");
}
