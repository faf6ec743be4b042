#include "cuboid/inverse.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

struct Candidate {
  Rational xi;
  Rational zeta;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

bool admissible(const Rational& v) { return (v > Rational(-1) && v.sign() < 0) || v > Rational(1); }

struct Survivors {
  Integer N;
  std::vector<Candidate> candidates;

  bool contains(const Candidate& c) const {
    return std::find(candidates.begin(), candidates.end(), c) != candidates.end();
  }
};

/// Enumerates (+-rs, +-s/r) over r in {r0, 1/r0}, s in {s0, 1/s0}, keeps the
/// admissible ones and extracts a common N from them.
Survivors filter_candidates(const Rational& r0, const Rational& s0, const FactorConfig& config) {
  Survivors out;
  for (int sigma : {1, -1}) {
    for (const Rational& r : {r0, reciprocal(r0)}) {
      for (const Rational& s : {s0, reciprocal(s0)}) {
        Candidate c{Rational(sigma) * r * s, Rational(sigma) * s / r};
        if (admissible(c.xi) && admissible(c.zeta)) out.candidates.push_back(std::move(c));
      }
    }
  }
  if (out.candidates.size() != 4) {
    throw Error(Errc::inconsistent_kernel,
                std::to_string(out.candidates.size()) + " of 8 candidates are admissible, expected 4");
  }

  std::optional<Integer> common;
  for (const auto& c : out.candidates) {
    for (const Rational* v : {&c.xi, &c.zeta}) {
      Integer n = squarefree_kernel(*v * (square(*v) - Rational(1)), config);
      if (common && *common != n) {
        throw Error(Errc::inconsistent_kernel,
                    "candidates give N = " + common->get_str() + " and N = " + n.get_str());
      }
      common = std::move(n);
    }
  }
  out.N = *common;
  return out;
}

Rational y_for(const Integer& N, const Rational& x) {
  const Rational rhs = curve_rhs(CurveParams(N), x);
  if (!is_square(rhs)) {
    throw Error(Errc::inconsistent_kernel, "x = " + x.str() + " is not on C_" + N.get_str());
  }
  return sqrt_exact(rhs);
}

RecoveredPair pair_from_ratios(const Integer& N, const Candidate& c, PairLabel label) {
  const Rational n(N);
  Rational X = n * c.xi;
  Rational Z = n * c.zeta;
  Rational Y = y_for(N, X);
  Rational W = y_for(N, Z);
  return RecoveredPair{label, std::move(X), std::move(Y), std::move(Z), std::move(W)};
}

RecoveredPair pair_from_points(const SolutionPair& pair, PairLabel label) {
  return RecoveredPair{label, pair.X(), abs(pair.Y()), pair.Z(), abs(pair.W())};
}

Candidate ratios_of(const RecoveredPair& p, const Integer& N) {
  const Rational n(N);
  return Candidate{p.X / n, p.Z / n};
}

/// The positive survivor ordered with xi > zeta.
Candidate leading_candidate(const Survivors& s) {
  for (const auto& c : s.candidates) {
    if (c.xi.sign() > 0 && c.xi > c.zeta) return c;
  }
  throw Error(Errc::inconsistent_kernel, "no positive candidate pair");
}

void require_npc(const Cuboid& cuboid) {
  for (const auto& e : cuboid.edges()) {
    if (e.sign() <= 0) throw Error(Errc::not_an_npc, "cuboid entries must be positive");
  }
  const auto violated = verify_npc(cuboid);
  if (!violated.empty()) {
    std::string names;
    for (auto r : violated) names += std::string(names.empty() ? "" : ", ") + std::string(to_string(r));
    throw Error(Errc::not_an_npc, "violated relations: " + names);
  }
}

void require_round_trip(const SolutionPair& pair, Parametrization p, const Cuboid& expected) {
  if (build_npc(pair, p) != expected) {
    throw Error(Errc::inconsistent_kernel,
                "recovered pair does not rebuild the input under the " + std::string(to_string(p)) +
                    " parametrization");
  }
}

FamilyRecovery recover_family(const Cuboid& cuboid, Parametrization parametrization, const Rational& r0,
                              const Rational& s0, const FactorConfig& config) {
  const Survivors survivors = filter_candidates(r0, s0, config);
  const Candidate lead = leading_candidate(survivors);
  const RecoveredPair pair = pair_from_ratios(survivors.N, lead, PairLabel::I);
  const SolutionPair points = to_solution_pair(survivors.N, pair);
  const RecoveredPair reflected = pair_from_points(reflect_pair_first(points), PairLabel::II);
  if (!survivors.contains(ratios_of(reflected, survivors.N))) {
    throw Error(Errc::inconsistent_kernel, "first reflection of the recovered pair is not a candidate");
  }
  require_round_trip(points, parametrization, normalized(cuboid));
  return FamilyRecovery{parametrization, survivors.N, pair, reflected, pc_condition(cuboid)};
}

}  // namespace

std::string_view to_string(PairLabel label) {
  switch (label) {
    case PairLabel::I: return "I";
    case PairLabel::II: return "II";
    case PairLabel::III: return "III";
    case PairLabel::IV: return "IV";
  }
  return "?";
}

SolutionPair to_solution_pair(const Integer& N, const RecoveredPair& pair) {
  const CurveParams curve(N);
  return SolutionPair::make(CurvePoint::affine(curve, pair.X, pair.Y),
                            CurvePoint::affine(curve, pair.Z, pair.W));
}

RecoveredSolutions recover_invariant(const Cuboid& cuboid, const FactorConfig& config) {
  require_npc(cuboid);
  const Cuboid& q = cuboid;

  // c/a and d_s/a fix sqrt(X/Z) and sqrt(XZ)/N.
  const Survivors by_a = filter_candidates((q.d_ac + q.c) / q.a, (q.d_s + q.d_bc) / q.a, config);
  const Integer& N = by_a.N;
  const RecoveredPair first = pair_from_ratios(N, leading_candidate(by_a), PairLabel::I);
  const SolutionPair first_points = to_solution_pair(N, first);

  const RecoveredPair second = pair_from_points(reflect_pair_first(first_points), PairLabel::II);
  if (!by_a.contains(ratios_of(second, N))) {
    throw Error(Errc::inconsistent_kernel, "pair II is not among the a-system candidates");
  }

  // The same system with a and b interchanged yields pairs III and IV.
  const Survivors by_b = filter_candidates((q.d_bc + q.c) / q.b, (q.d_s + q.d_ac) / q.b, config);
  if (by_b.N != N) {
    throw Error(Errc::inconsistent_kernel,
                "a-system gives N = " + N.get_str() + ", b-system gives N = " + by_b.N.get_str());
  }
  const SolutionPair third_points = reflect_pair_second(first_points);
  const RecoveredPair third = pair_from_points(third_points, PairLabel::III);
  const RecoveredPair fourth = pair_from_points(reflect_pair_first(third_points), PairLabel::IV);
  for (const auto* p : {&third, &fourth}) {
    if (!by_b.contains(ratios_of(*p, N))) {
      throw Error(Errc::inconsistent_kernel,
                  "pair " + std::string(to_string(p->which)) + " is not among the b-system candidates");
    }
  }

  require_round_trip(first_points, Parametrization::invariant, normalized(cuboid));
  return RecoveredSolutions{N, {first, second, third, fourth}, pc_condition(cuboid)};
}

FamilyRecovery recover_first(const Cuboid& cuboid, const FactorConfig& config) {
  require_npc(cuboid);
  const Cuboid& q = cuboid;
  // b/d_s, d_ac/d_s lie on the unit circle with parameter sqrt(X/Z);
  // a/d_s, d_bc/d_s with parameter sqrt(XZ)/N.
  return recover_family(cuboid, Parametrization::first, (q.d_s + q.b) / q.d_ac, (q.d_s + q.d_bc) / q.a,
                        config);
}

FamilyRecovery recover_second(const Cuboid& cuboid, const FactorConfig& config) {
  require_npc(cuboid);
  const Cuboid& q = cuboid;
  // d_s/a, d_bc/a lie on x^2 - y^2 = 1 with parameter sqrt(X/Z);
  // d_ac/a, c/a with parameter sqrt(XZ)/N. On that branch t = (x+y-1)/(x+y+1).
  const Rational r0 = (q.d_s + q.d_bc - q.a) / (q.d_s + q.d_bc + q.a);
  const Rational s0 = (q.d_ac + q.c - q.a) / (q.d_ac + q.c + q.a);
  return recover_family(cuboid, Parametrization::second, r0, s0, config);
}

std::optional<Cuboid> label_npc(const std::array<Rational, 3>& sides) {
  std::optional<Cuboid> perfect;
  for (std::size_t k = 0; k < 3; ++k) {
    // Side k becomes c; the other two keep their order as a, b.
    const Rational& c = sides[k];
    const Rational& a = sides[k == 0 ? 1 : 0];
    const Rational& b = sides[k == 2 ? 1 : 2];
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) return std::nullopt;
    const Rational ac = square(a) + square(c);
    const Rational bc = square(b) + square(c);
    const Rational s = square(a) + square(b) + square(c);
    if (!is_square(ac) || !is_square(bc) || !is_square(s)) continue;
    Cuboid q = Cuboid::from_edges(a, b, c, sqrt_exact(ac), sqrt_exact(bc), sqrt_exact(s));
    if (!pc_condition(q)) return q;
    perfect = std::move(q);
  }
  return perfect;
}

}  // namespace cuboid
