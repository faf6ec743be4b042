#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuboid {

/// Failure categories raised by the library. Every throw site uses exactly
/// one of these so callers (the CLI in particular) can map them to exit codes.
enum class Errc {
  parse_error,
  division_by_zero,
  not_a_square,
  factorization_exceeded,
  curve_mismatch,
  not_on_curve,
  trivial_input,
  vertical_secant,
  degenerate_pair,
  square_check_failed,
  trivial_parameter,
  zero_side,
  not_an_npc,
  inconsistent_kernel,
  invalid_seed,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cuboid
