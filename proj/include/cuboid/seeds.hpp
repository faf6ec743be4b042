#pragma once

#include <string>
#include <vector>

#include "cuboid/curve.hpp"

namespace cuboid {

/// Known nontrivial points on small congruent curves:
/// (-4, 6) on C_5, (-3, 9) on C_6, (25, 120) on C_7, (-2, 48) on C_34.
std::vector<CurvePoint> default_seeds();

/// One point record per line (blank lines and '#' comments skipped). Every
/// point must be a nontrivial curve point; throws Error(invalid_seed)
/// otherwise and Error(parse_error) on malformed lines or unreadable files.
std::vector<CurvePoint> load_seeds(const std::string& path);

/// Same format, from in-memory text.
std::vector<CurvePoint> parse_seeds(const std::string& text);

}  // namespace cuboid
