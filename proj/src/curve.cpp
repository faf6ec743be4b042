#include "cuboid/curve.hpp"

#include <string>

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

void require_same_curve(const CurvePoint& p, const CurvePoint& q) {
  if (!(p.curve() == q.curve())) {
    throw Error(Errc::curve_mismatch,
                "points on C_" + p.curve().N().get_str() + " and C_" + q.curve().N().get_str());
  }
}

void require_affine(const CurvePoint& p, const char* op) {
  if (p.is_infinity()) throw Error(Errc::trivial_input, std::string(op) + " of the point at infinity");
}

/// Third intersection of the line y = slope*x + c with the curve, given two
/// known intersections x1, x2; returns the group-law sum (negated third point).
CurvePoint chord_sum(const CurveParams& curve, const Rational& slope, const Rational& x1,
                     const Rational& y1, const Rational& x2) {
  Rational x3 = square(slope) - x1 - x2;
  Rational y3 = slope * (x1 - x3) - y1;
  return CurvePoint::affine(curve, std::move(x3), std::move(y3));
}

}  // namespace

CurveParams::CurveParams(Integer n) : n_(std::move(n)) {
  if (n_ < 1) throw Error(Errc::trivial_input, "curve parameter N must be >= 1, got " + n_.get_str());
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (!(a.curve() == b.curve())) return false;
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  return a.x() == b.x() && a.y() == b.y();
}

Rational curve_rhs(const CurveParams& curve, const Rational& x) {
  return x * (square(x) - curve.n_squared());
}

bool on_curve(const CurvePoint& p) {
  if (p.is_infinity()) return true;
  return square(p.y()) == curve_rhs(p.curve(), p.x());
}

CurvePoint negate(const CurvePoint& p) {
  if (p.is_infinity()) return p;
  return CurvePoint::affine(p.curve(), p.x(), -p.y());
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
  require_same_curve(p, q);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == q.y()) return double_point(p);
    return CurvePoint::infinity(p.curve());
  }
  const Rational slope = (q.y() - p.y()) / (q.x() - p.x());
  return chord_sum(p.curve(), slope, p.x(), p.y(), q.x());
}

CurvePoint double_point(const CurvePoint& p) {
  if (p.is_infinity() || p.y().is_zero()) return CurvePoint::infinity(p.curve());
  const Rational slope = (Rational(3) * square(p.x()) - p.curve().n_squared()) / (Rational(2) * p.y());
  return chord_sum(p.curve(), slope, p.x(), p.y(), p.x());
}

CurvePoint mul(std::int64_t k, const CurvePoint& p) {
  if (k < 0) {
    // -k overflows only for INT64_MIN; peel one copy off first.
    return negate(add(mul(-(k + 1), p), p));
  }
  CurvePoint result = CurvePoint::infinity(p.curve());
  CurvePoint addend = p;
  auto bits = static_cast<std::uint64_t>(k);
  while (bits != 0) {
    if ((bits & 1U) != 0) result = add(result, addend);
    bits >>= 1U;
    if (bits != 0) addend = double_point(addend);
  }
  return result;
}

Rational secant_y_intercept(const CurvePoint& p, const CurvePoint& q) {
  require_same_curve(p, q);
  require_affine(p, "secant");
  require_affine(q, "secant");
  if (p.x() == q.x()) throw Error(Errc::vertical_secant, "points share x = " + p.x().str());
  return (p.x() * q.y() - p.y() * q.x()) / (p.x() - q.x());
}

CurvePoint reflect_first(const CurvePoint& p) {
  require_affine(p, "reflect_first");
  if (p.x().is_zero()) throw Error(Errc::trivial_input, "reflect_first undefined at x = 0");
  const Rational n2 = p.curve().n_squared();
  return CurvePoint::affine(p.curve(), -n2 / p.x(), -n2 * p.y() / square(p.x()));
}

CurvePoint reflect_second(const CurvePoint& p) {
  require_affine(p, "reflect_second");
  const Rational n(p.curve().N());
  const Rational shifted = p.x() - n;
  if (shifted.is_zero()) throw Error(Errc::trivial_input, "reflect_second undefined at x = N");
  return CurvePoint::affine(p.curve(), n * (p.x() + n) / shifted,
                            Rational(2) * square(n) * p.y() / square(shifted));
}

CurvePoint reflect_third(const CurvePoint& p) {
  require_affine(p, "reflect_third");
  const Rational n(p.curve().N());
  const Rational shifted = p.x() + n;
  if (shifted.is_zero()) throw Error(Errc::trivial_input, "reflect_third undefined at x = -N");
  return CurvePoint::affine(p.curve(), n * (n - p.x()) / shifted,
                            Rational(2) * square(n) * p.y() / square(shifted));
}

SolutionPair SolutionPair::make(const CurvePoint& p, const CurvePoint& q) {
  require_same_curve(p, q);
  for (const CurvePoint* pt : {&p, &q}) {
    if (pt->is_infinity() || pt->is_trivial()) {
      throw Error(Errc::degenerate_pair, "solution pair points must have y != 0");
    }
    if (!on_curve(*pt)) {
      throw Error(Errc::not_on_curve, "(" + pt->x().str() + ", " + pt->y().str() + ") is not on C_" +
                                          pt->curve().N().get_str());
    }
  }
  if (p.x() == q.x()) throw Error(Errc::degenerate_pair, "solution pair needs X != Z");
  if (!is_square(p.x() * q.x())) {
    throw Error(Errc::degenerate_pair, "X*Z = " + (p.x() * q.x()).str() + " is not a square");
  }
  return SolutionPair(p, q);
}

SolutionPair same_parity_pair(const CurvePoint& p, std::int64_t k, std::int64_t m) {
  if (k == m || k == 0 || m == 0) throw Error(Errc::degenerate_pair, "need k != m and k*m != 0");
  if ((k - m) % 2 != 0) throw Error(Errc::degenerate_pair, "k and m must have the same parity");
  if (p.is_infinity() || p.is_trivial()) throw Error(Errc::degenerate_pair, "base point is trivial");

  const CurvePoint kp = mul(k, p);
  const CurvePoint mp = mul(m, p);
  if (kp.is_infinity() || kp.is_trivial() || mp.is_infinity() || mp.is_trivial()) {
    throw Error(Errc::degenerate_pair, "a multiple of the base point is trivial");
  }
  if (kp.x() == mp.x()) throw Error(Errc::degenerate_pair, "multiples share an x-coordinate");
  if (!is_square(kp.x() * mp.x())) {
    throw Error(Errc::square_check_failed, "[" + std::to_string(k) + "P]_x * [" + std::to_string(m) +
                                               "P]_x is not a square");
  }
  return SolutionPair::make(kp, mp);
}

SolutionPair reflect_pair_first(const SolutionPair& pair) {
  return SolutionPair::make(reflect_first(pair.p()), reflect_first(pair.q()));
}

SolutionPair reflect_pair_second(const SolutionPair& pair) {
  return SolutionPair::make(reflect_second(pair.p()), reflect_second(pair.q()));
}

SolutionPair reflect_pair_third(const SolutionPair& pair) {
  return SolutionPair::make(reflect_third(pair.p()), reflect_third(pair.q()));
}

KummerPoint kummer_map(const SolutionPair& pair) {
  const Rational n(pair.N());
  return KummerPoint{pair.X() / n, pair.Z() / n, pair.Y() * pair.W() / (n * n * n)};
}

bool kummer_identity_holds(const KummerPoint& k) {
  const Rational one(1);
  return square(k.eta) == k.xi * k.zeta * (square(k.xi) - one) * (square(k.zeta) - one);
}

}  // namespace cuboid
