#pragma once

/*
 * Inverse problem: from a labelled nearly-perfect cuboid back to the
 * congruent number N and the solution pairs that generate it.
 *
 * For each family the cuboid fixes two conic parameters r = sqrt(X/Z) and
 * s = sqrt(XZ)/N up to reciprocal, and the pair up to overall sign, which
 * gives eight candidates (xi, zeta) = (X/N, Z/N) = (+-rs, +-s/r). Only
 * candidates with -1 < xi < 0 or xi > 1 (for both coordinates) can be x/N of
 * a nontrivial point. N is then the squarefree kernel of xi(xi^2 - 1).
 */

#include <array>
#include <optional>
#include <string_view>

#include "cuboid/cuboid.hpp"
#include "cuboid/factor.hpp"

namespace cuboid {

enum class PairLabel { I, II, III, IV };

std::string_view to_string(PairLabel label);

/// A solution pair as x-coordinates plus non-negative y-values.
struct RecoveredPair {
  PairLabel which;
  Rational X, Y, Z, W;

  friend bool operator==(const RecoveredPair&, const RecoveredPair&) = default;
};

struct RecoveredSolutions {
  Integer N;
  /// I: the positive pair with X > Z; II = first reflection of I;
  /// III = second reflection of I; IV = first reflection of III.
  std::array<RecoveredPair, 4> pairs;
  /// The input was in fact a perfect cuboid.
  bool perfect = false;
};

struct FamilyRecovery {
  Parametrization parametrization;
  Integer N;
  RecoveredPair pair;       // positive pair, X > Z
  RecoveredPair reflected;  // first reflection of pair
  bool perfect = false;
};

/// Throws Error(not_an_npc) if the cuboid fails verify_npc or has a
/// nonpositive entry, Error(inconsistent_kernel) if the candidates do not
/// agree on N (or the filter does not leave exactly four), and propagates
/// Error(factorization_exceeded).
RecoveredSolutions recover_invariant(const Cuboid& cuboid, const FactorConfig& config = {});

/// Inverse of the first-family ratio system.
FamilyRecovery recover_first(const Cuboid& cuboid, const FactorConfig& config = {});

/// Inverse of the second-family ratio system.
FamilyRecovery recover_second(const Cuboid& cuboid, const FactorConfig& config = {});

/// Materialize a recovered pair as a validated SolutionPair on C_N.
SolutionPair to_solution_pair(const Integer& N, const RecoveredPair& pair);

/// Given unlabelled sides, try the three choices of which two sides span the
/// irrational face diagonal; returns the labelled cuboid (a, b keep their
/// relative input order) whose other diagonals are rational, if any.
std::optional<Cuboid> label_npc(const std::array<Rational, 3>& sides);

}  // namespace cuboid
