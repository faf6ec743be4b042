#include "cuboid/seeds.hpp"

#include <fstream>
#include <sstream>

#include "cuboid/error.hpp"
#include "cuboid/json_io.hpp"

namespace cuboid {

namespace {

CurvePoint validated(CurvePoint p) {
  if (p.is_infinity() || p.is_trivial() || !on_curve(p)) {
    throw Error(Errc::invalid_seed, json::point(p) + " is not a nontrivial point of its curve");
  }
  return p;
}

}  // namespace

std::vector<CurvePoint> default_seeds() {
  auto seed = [](long n, long x, long y) {
    return validated(CurvePoint::affine(CurveParams(Integer(n)), x, y));
  };
  return {seed(5, -4, 6), seed(6, -3, 9), seed(7, 25, 120), seed(34, -2, 48)};
}

std::vector<CurvePoint> parse_seeds(const std::string& text) {
  std::vector<CurvePoint> seeds;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      seeds.push_back(validated(json::point_from(json::parse(line))));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse_error, "seed line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return seeds;
}

std::vector<CurvePoint> load_seeds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read seed file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_seeds(text.str());
}

}  // namespace cuboid
