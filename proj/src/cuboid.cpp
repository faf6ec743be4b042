#include "cuboid/cuboid.hpp"

#include <string>

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

/// Shared subexpressions of the five ratio systems.
struct Terms {
  Rational n;       // N
  Rational n2;      // N^2
  Rational xz;      // XZ
  Rational root;    // sqrt(XZ) >= 0
  Rational sum;     // X + Z
  Rational diff;    // X - Z
  Rational yw;      // |YW|
};

Terms terms_of(const PairValues& v) {
  if (v.N < 1) throw Error(Errc::degenerate_pair, "N must be positive");
  const Rational xz = v.X * v.Z;
  if (xz.is_zero() || !is_square(xz)) {
    throw Error(Errc::degenerate_pair, "X*Z = " + xz.str() + " is not a nonzero square");
  }
  const Rational n(v.N);
  return Terms{n, square(n), xz, sqrt_exact(xz), v.X + v.Z, v.X - v.Z, abs(v.Y * v.W)};
}

Rational ratio(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw Error(Errc::degenerate_pair, std::string("vanishing denominator: ") + what);
  return num / den;
}

Cuboid assemble(Rational a, Rational b, Rational c, Rational d_ac, Rational d_bc, Rational d_s) {
  static constexpr std::array<const char*, 6> kNames{"a", "b", "c", "d_ac", "d_bc", "d_s"};
  const std::array<Rational*, 6> slots{&a, &b, &c, &d_ac, &d_bc, &d_s};
  for (std::size_t i = 0; i < slots.size(); ++i) {
    *slots[i] = abs(*slots[i]);
    if (slots[i]->is_zero()) throw Error(Errc::zero_side, std::string(kNames[i]) + " evaluates to 0");
  }
  return normalized(Cuboid::from_edges(a, b, c, d_ac, d_bc, d_s));
}

// Ratios to d_s.
Cuboid first_param(const Terms& t) {
  const Rational two(2);
  const Rational denom_sum = t.xz + t.n2;
  return assemble(ratio(two * t.n * t.root, denom_sum, "XZ + N^2"),
                  ratio(t.diff, t.sum, "X + Z"),
                  ratio(two * t.yw, denom_sum * t.sum, "(XZ + N^2)(X + Z)"),
                  ratio(two * t.root, t.sum, "X + Z"),
                  ratio(t.xz - t.n2, denom_sum, "XZ + N^2"),
                  Rational(1));
}

// Ratios to d_s'.
Cuboid first_reflected_param(const Terms& t) {
  const Rational two(2);
  const Rational plus = t.xz + t.n2;
  const Rational minus = t.xz - t.n2;
  return assemble(ratio(t.yw, plus * t.root, "(XZ + N^2) sqrt(XZ)"),
                  ratio(t.n * t.diff, minus, "XZ - N^2"),
                  ratio(two * t.n * t.yw, square(t.xz) - square(t.n2), "X^2 Z^2 - N^4"),
                  ratio(t.yw, minus * t.root, "(XZ - N^2) sqrt(XZ)"),
                  ratio(t.n * t.sum, plus, "XZ + N^2"),
                  Rational(1));
}

// Ratios to a.
Cuboid second_param(const Terms& t) {
  const Rational two(2);
  const Rational gap = t.n2 - t.xz;
  return assemble(Rational(1),
                  ratio(two * t.yw, t.diff * gap, "(X - Z)(N^2 - XZ)"),
                  ratio(two * t.n * t.root, gap, "N^2 - XZ"),
                  ratio(t.n2 + t.xz, gap, "N^2 - XZ"),
                  ratio(two * t.root, t.diff, "X - Z"),
                  ratio(t.sum, t.diff, "X - Z"));
}

// Ratios to a'.
Cuboid second_reflected_param(const Terms& t) {
  const Rational two(2);
  const Rational n_sum = t.n * t.sum;
  const Rational n_diff = t.n * t.diff;
  return assemble(Rational(1),
                  ratio(two * t.yw, n_sum * t.diff, "N(Z^2 - X^2)"),
                  ratio(t.yw, n_sum * t.root, "N(X + Z) sqrt(XZ)"),
                  ratio(t.xz + t.n2, n_sum, "N(X + Z)"),
                  ratio(t.yw, n_diff * t.root, "N(Z - X) sqrt(XZ)"),
                  ratio(t.xz - t.n2, n_diff, "N(Z - X)"));
}

// Closed integral form: a = 2XZN, b = |YW|, c = |X-Z| sqrt(XZ) N, ...
Cuboid invariant_param(const Terms& t) {
  return assemble(Rational(2) * t.xz * t.n,
                  t.yw,
                  t.diff * t.root * t.n,
                  t.sum * t.root * t.n,
                  (t.xz - t.n2) * t.root,
                  (t.xz + t.n2) * t.root);
}

}  // namespace

std::string_view to_string(Parametrization p) {
  switch (p) {
    case Parametrization::first: return "first";
    case Parametrization::first_reflected: return "first_reflected";
    case Parametrization::second: return "second";
    case Parametrization::second_reflected: return "second_reflected";
    case Parametrization::invariant: return "invariant";
  }
  return "unknown";
}

std::optional<Parametrization> parse_parametrization(std::string_view name) {
  for (auto p : kAllParametrizations) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

Cuboid Cuboid::from_edges(Rational a, Rational b, Rational c, Rational d_ac, Rational d_bc, Rational d_s) {
  Rational d_ab_sq = square(a) + square(b);
  return Cuboid{std::move(a), std::move(b),    std::move(c),      std::move(d_bc),
                std::move(d_ac), std::move(d_s), std::move(d_ab_sq)};
}

Cuboid normalized(const Cuboid& cuboid) {
  const auto edges = cuboid.edges();
  const auto ints = primitive_integer_scaling(edges);
  return Cuboid::from_edges(ints[0], ints[1], ints[2], ints[3], ints[4], ints[5]);
}

Cuboid swap_ab(const Cuboid& cuboid) {
  return Cuboid::from_edges(cuboid.b, cuboid.a, cuboid.c, cuboid.d_bc, cuboid.d_ac, cuboid.d_s);
}

PairValues PairValues::of(const SolutionPair& pair) {
  return PairValues{pair.N(), pair.X(), pair.Y(), pair.Z(), pair.W()};
}

ParametrizationVariables variables_from_pair(const PairValues& values, Family family) {
  const Terms t = terms_of(values);
  const Rational eta = t.yw / (t.n2 * t.n);
  switch (family) {
    case Family::first:
      return {family, t.root / t.n, sqrt_exact(values.X / values.Z),
              ratio(t.yw, (t.xz + t.n2) * t.sum, "(XZ + N^2)(X + Z)"), eta};
    case Family::second:
      return {family, sqrt_exact(values.Z / values.X), t.root / t.n,
              ratio(t.yw, t.diff * (t.n2 - t.xz), "(X - Z)(N^2 - XZ)"), eta};
    case Family::third:
      return {family, t.root / t.n, sqrt_exact(values.Z / values.X), t.yw / (t.xz * t.n), eta};
  }
  throw Error(Errc::degenerate_pair, "unknown family");
}

ParametrizationVariables variables_from_pair(const SolutionPair& pair, Family family) {
  return variables_from_pair(PairValues::of(pair), family);
}

Cuboid build_npc(const PairValues& values, Parametrization parametrization) {
  const Terms t = terms_of(values);
  switch (parametrization) {
    case Parametrization::first: return first_param(t);
    case Parametrization::first_reflected: return first_reflected_param(t);
    case Parametrization::second: return second_param(t);
    case Parametrization::second_reflected: return second_reflected_param(t);
    case Parametrization::invariant: return invariant_param(t);
  }
  throw Error(Errc::degenerate_pair, "unknown parametrization");
}

Cuboid build_npc(const SolutionPair& pair, Parametrization parametrization) {
  return build_npc(PairValues::of(pair), parametrization);
}

bool pc_condition(const Cuboid& cuboid) { return is_square(cuboid.d_ab_sq); }

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::face_ab: return "face_ab";
    case Relation::face_bc: return "face_bc";
    case Relation::face_ac: return "face_ac";
    case Relation::space_diagonal: return "space_diagonal";
  }
  return "unknown";
}

std::vector<Relation> verify_npc(const Cuboid& q) {
  const Rational a2 = square(q.a);
  const Rational b2 = square(q.b);
  const Rational c2 = square(q.c);
  std::vector<Relation> violated;
  if (a2 + b2 != q.d_ab_sq) violated.push_back(Relation::face_ab);
  if (b2 + c2 != square(q.d_bc)) violated.push_back(Relation::face_bc);
  if (a2 + c2 != square(q.d_ac)) violated.push_back(Relation::face_ac);
  if (a2 + b2 + c2 != square(q.d_s)) violated.push_back(Relation::space_diagonal);
  return violated;
}

}  // namespace cuboid
