#include "cuboid/error.hpp"

namespace cuboid {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_a_square: return "NotASquare";
    case Errc::factorization_exceeded: return "FactorizationExceeded";
    case Errc::curve_mismatch: return "CurveMismatch";
    case Errc::not_on_curve: return "NotOnCurve";
    case Errc::trivial_input: return "TrivialInput";
    case Errc::vertical_secant: return "VerticalSecant";
    case Errc::degenerate_pair: return "DegeneratePair";
    case Errc::square_check_failed: return "SquareCheckFailed";
    case Errc::trivial_parameter: return "TrivialParameter";
    case Errc::zero_side: return "ZeroSide";
    case Errc::not_an_npc: return "NotAnNPC";
    case Errc::inconsistent_kernel: return "InconsistentKernel";
    case Errc::invalid_seed: return "InvalidSeed";
  }
  return "Unknown";
}

}  // namespace cuboid
