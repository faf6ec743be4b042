#include "cuboid/rational.hpp"

#include <ostream>

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_decimal(digits)) {
    throw Error(Errc::parse_error, "not a decimal integer: '" + std::string(text) + "'");
  }
  Integer n(std::string(digits), 10);
  return negative ? Integer(-n) : n;
}

std::size_t decimal_digits(const Integer& n) {
  if (n == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t len = mpz_sizeinbase(n.get_mpz_t(), 10);
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, len - 1);
  Integer mag = abs(n);
  return mag < bound ? len - 1 : len;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::division_by_zero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::approx(int places) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Integer scaled = value_.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value_.get_den().get_mpz_t());
  const bool negative = sign() < 0;
  std::string digits = Integer(abs(scaled)).get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
  }
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational square(const Rational& r) { return r * r; }

Rational reciprocal(const Rational& r) { return Rational(1) / r; }

bool is_square(const Rational& r) {
  if (r.sign() < 0) return false;
  return mpz_perfect_square_p(r.gmp().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.gmp().get_den_mpz_t()) != 0;
}

Rational sqrt_exact(const Rational& r) {
  if (!is_square(r)) throw Error(Errc::not_a_square, r.str() + " is not the square of a rational");
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.gmp().get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.gmp().get_den_mpz_t());
  return Rational(n, d);
}

std::vector<Integer> primitive_integer_scaling(std::span<const Rational> values) {
  Integer common_den = 1;
  for (const auto& v : values) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), v.gmp().get_den_mpz_t());

  std::vector<Integer> out;
  out.reserve(values.size());
  Integer g = 0;
  for (const auto& v : values) {
    Integer n = abs(v.num()) * (common_den / v.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g == 0) throw Error(Errc::trivial_input, "cannot scale an all-zero tuple");
  for (auto& n : out) n /= g;
  return out;
}

}  // namespace cuboid
