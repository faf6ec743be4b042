#pragma once

#include <random>
#include <string>

#include "cuboid/error.hpp"
#include "cuboid/rational.hpp"
#include "doctest.h"

#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const cuboid::Error& e_) {                          \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());             \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected " #errc " from " #expr);    \
  } while (0)

inline cuboid::Rational Q(const char* text) { return cuboid::Rational::parse(text); }

/// Random nonzero rational with numerator/denominator up to `bound`.
inline cuboid::Rational random_rational(std::mt19937_64& rng, long bound = 1000) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  long n = 0;
  while (n == 0) n = num(rng);
  return cuboid::Rational(cuboid::Integer(n), cuboid::Integer(den(rng)));
}
