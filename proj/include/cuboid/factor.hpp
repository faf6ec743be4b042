#pragma once

#include <cstdint>
#include <map>

#include "cuboid/rational.hpp"

namespace cuboid {

/// Effort limits for integer factorization.
struct FactorConfig {
  /// Trial division covers every prime up to this bound.
  std::uint64_t trial_bound = 1'000'000;
  /// Total Pollard-Brent iterations allowed across one factorization.
  std::uint64_t rho_iterations = 5'000'000;

  /// Defaults, with rho_iterations overridden by CUBOID_FACTOR_BUDGET when set
  /// to a positive integer.
  static FactorConfig from_environment();
};

/// Prime factorization of |n| (n != 0) as prime -> exponent.
/// Throws Error(factorization_exceeded) if a composite cofactor survives the
/// configured effort.
std::map<Integer, unsigned> factorize(const Integer& n, const FactorConfig& config = {});

/// Squarefree part of a positive integer: product of primes with odd exponent.
Integer squarefree_part(const Integer& n, const FactorConfig& config = {});

/// The unique squarefree positive integer s such that s*|r| is a rational
/// square. Throws Error(trivial_input) for r == 0.
Integer squarefree_kernel(const Rational& r, const FactorConfig& config = {});

}  // namespace cuboid
