#pragma once

/*
 * JSON wire formats.
 *
 * Integers of arbitrary size appear as bare JSON numbers and rationals as
 * "p/q" strings. nlohmann::json cannot hold integers beyond 64 bits, so
 * parse_json keeps any number that does not fit as its literal text
 * (a string), and writers emit numbers from exact decimal text. Keys are
 * written in a fixed order so output is byte-stable.
 */

#include "json.hpp"

#include <string>
#include <string_view>

#include "cuboid/cuboid.hpp"
#include "cuboid/curve.hpp"
#include "cuboid/inverse.hpp"
#include "cuboid/search.hpp"

namespace cuboid::json {

/// Parse JSON text. Throws Error(parse_error).
nlohmann::json parse(std::string_view text);

/// Accepts a JSON integer, or a string holding a decimal integer.
Integer to_integer(const nlohmann::json& v);
/// Accepts a JSON integer or a "p/q" string.
Rational to_rational(const nlohmann::json& v);

/// Minimal ordered object writer.
class ObjectWriter {
 public:
  ObjectWriter& raw(std::string_view key, std::string_view json_text);
  ObjectWriter& string(std::string_view key, std::string_view value);
  ObjectWriter& integer(std::string_view key, const Integer& value);
  ObjectWriter& integer(std::string_view key, std::int64_t value) { return integer(key, Integer(static_cast<long>(value))); }
  ObjectWriter& rational(std::string_view key, const Rational& value);
  ObjectWriter& boolean(std::string_view key, bool value);
  std::string str() const { return out_ + "}"; }

 private:
  std::string out_ = "{";
};

/// {"N": int, "x": "p/q", "y": "p/q"} or {"N": int, "infinity": true}.
/// With `approx`, affine points gain "x_approx"/"y_approx" decimal strings.
std::string point(const CurvePoint& p, bool approx = false);
CurvePoint point_from(const nlohmann::json& v);

struct CuboidSource {
  Integer N;
  Rational X, Z;
  Parametrization parametrization;
};

/// {"a","b","c","d_ac","d_bc","d_s","d_ab_sq","pc"[,"source"]}
std::string cuboid(const Cuboid& q, const std::optional<CuboidSource>& source = std::nullopt);
/// Reads a, b, c, d_ac, d_bc, d_s (integers or "p/q"); d_ab_sq is taken
/// from the record when present, else computed.
Cuboid cuboid_from(const nlohmann::json& v);

/// {"N":int,"family":"invariant","pc":bool,"pairs":[{"X","Z","Y","W","which"}]}
std::string recovered(const RecoveredSolutions& r);
/// {"N":int,"family":"first|second","pc":bool,"pairs":[pair, reflected]}
std::string recovered(const FamilyRecovery& r);

/// One JSONL line (without newline).
std::string record(const SearchRecord& r);

/// Reads a search job; seeds may be inline ("seeds") or a path ("seeds_file",
/// resolved relative to `base_dir`).
SearchJob job_from(const nlohmann::json& v, const std::string& base_dir = ".");

}  // namespace cuboid::json
