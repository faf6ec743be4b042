#pragma once

/*
 * Exact rational arithmetic.
 *
 * Rational is the single scalar type used throughout the library. Values are
 * kept in canonical form at all times: the denominator is positive and
 * coprime to the numerator, zero is 0/1. Structural equality of the reduced
 * form is value equality.
 *
 * Storage is a GMP mpq_class; the wrapper exists to pin down the canonical
 * text format ("p/q", or "p" for integers), the error behaviour, and the
 * square predicates that the curve and cuboid code rely on.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cuboid {

using Integer = mpz_class;

/// Parse a signed decimal integer. Throws Error(parse_error).
Integer parse_integer(std::string_view text);

/// Number of decimal digits of |n| (0 has one digit).
std::size_t decimal_digits(const Integer& n);

class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// num/den, reduced. Throws Error(division_by_zero) if den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "p/q", with optional sign on p (and on q, which is folded
  /// into the numerator). Unreduced input is canonicalized.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Canonical "p/q" form; integers print without "/1".
  std::string str() const;

  /// Decimal rendering rounded toward zero with `places` fractional digits.
  /// Display only; never fed back into arithmetic.
  std::string approx(int places = 12) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& gmp() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Rational square(const Rational& r);
/// Multiplicative inverse. Throws Error(division_by_zero) on zero.
Rational reciprocal(const Rational& r);

/// True iff r >= 0 and numerator and denominator are both perfect squares.
bool is_square(const Rational& r);

/// The non-negative s with s*s == r. Throws Error(not_a_square).
Rational sqrt_exact(const Rational& r);

/// Coprime non-negative integers proportional to |values|. Requires at
/// least one nonzero entry.
std::vector<Integer> primitive_integer_scaling(std::span<const Rational> values);

}  // namespace cuboid
