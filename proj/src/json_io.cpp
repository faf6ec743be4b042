#include "cuboid/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <vector>

#include "cuboid/error.hpp"
#include "cuboid/seeds.hpp"

namespace cuboid::json {

namespace {

using nlohmann::json;

/// DOM builder that keeps numbers too large for 64 bits as their literal text.
class ExactSax : public nlohmann::json_sax<json> {
 public:
  bool null() override { return put(nullptr); }
  bool boolean(bool v) override { return put(v); }
  bool number_integer(number_integer_t v) override { return put(v); }
  bool number_unsigned(number_unsigned_t v) override { return put(v); }
  bool number_float(number_float_t, const string_t& literal) override { return put(literal); }
  bool string(string_t& v) override { return put(v); }
  bool binary(binary_t&) override { return put(nullptr); }

  bool start_object(std::size_t) override {
    stack_.push_back(place(json::object()));
    return true;
  }
  bool key(string_t& k) override {
    pending_key_ = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    stack_.push_back(place(json::array()));
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    throw Error(Errc::parse_error, "invalid JSON at byte " + std::to_string(position) + ": " + ex.what());
  }

  json take() { return std::move(root_); }

 private:
  json* place(json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    json& parent = *stack_.back();
    if (parent.is_array()) {
      parent.push_back(std::move(value));
      return &parent.back();
    }
    json& slot = parent[pending_key_];
    slot = std::move(value);
    return &slot;
  }

  template <typename T>
  bool put(T&& v) {
    place(json(std::forward<T>(v)));
    return true;
  }

  json root_;
  std::vector<json*> stack_;
  std::string pending_key_;
};

std::string quote_json(std::string_view s) { return json(std::string(s)).dump(); }

const json& field(const json& v, const char* name) {
  if (!v.is_object() || !v.contains(name)) {
    throw Error(Errc::parse_error, std::string("missing field \"") + name + "\"");
  }
  return v.at(name);
}

}  // namespace

json parse(std::string_view text) {
  ExactSax sax;
  json::sax_parse(text, &sax);
  return sax.take();
}

Integer to_integer(const json& v) {
  if (v.is_number_unsigned()) return Integer(static_cast<unsigned long>(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw Error(Errc::parse_error, "expected an integer, got " + v.dump());
}

Rational to_rational(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  return Rational(to_integer(v));
}

ObjectWriter& ObjectWriter::raw(std::string_view key, std::string_view json_text) {
  if (out_.size() > 1) out_ += ",";
  out_ += quote_json(key);
  out_ += ":";
  out_ += json_text;
  return *this;
}

ObjectWriter& ObjectWriter::string(std::string_view key, std::string_view value) {
  return raw(key, quote_json(value));
}

ObjectWriter& ObjectWriter::integer(std::string_view key, const Integer& value) {
  return raw(key, value.get_str());
}

ObjectWriter& ObjectWriter::rational(std::string_view key, const Rational& value) {
  return raw(key, quote_json(value.str()));
}

ObjectWriter& ObjectWriter::boolean(std::string_view key, bool value) {
  return raw(key, value ? "true" : "false");
}

std::string point(const CurvePoint& p, bool approx) {
  ObjectWriter w;
  w.integer("N", p.curve().N());
  if (p.is_infinity()) return w.boolean("infinity", true).str();
  w.rational("x", p.x()).rational("y", p.y());
  if (approx) w.string("x_approx", p.x().approx()).string("y_approx", p.y().approx());
  return w.str();
}

CurvePoint point_from(const json& v) {
  CurveParams curve(to_integer(field(v, "N")));
  if (v.contains("infinity") && v.at("infinity").is_boolean() && v.at("infinity").get<bool>()) {
    return CurvePoint::infinity(curve);
  }
  return CurvePoint::affine(curve, to_rational(field(v, "x")), to_rational(field(v, "y")));
}

namespace {

/// Integer entries as JSON numbers; a non-integral rational falls back to "p/q".
std::string number_text(const Rational& r) { return r.is_integer() ? r.num().get_str() : quote_json(r.str()); }

}  // namespace

std::string cuboid(const Cuboid& q, const std::optional<CuboidSource>& source) {
  ObjectWriter w;
  w.raw("a", number_text(q.a))
      .raw("b", number_text(q.b))
      .raw("c", number_text(q.c))
      .raw("d_ac", number_text(q.d_ac))
      .raw("d_bc", number_text(q.d_bc))
      .raw("d_s", number_text(q.d_s))
      .raw("d_ab_sq", number_text(q.d_ab_sq))
      .boolean("pc", pc_condition(q));
  if (source) {
    ObjectWriter s;
    s.integer("N", source->N)
        .rational("X", source->X)
        .rational("Z", source->Z)
        .string("parametrization", to_string(source->parametrization));
    w.raw("source", s.str());
  }
  return w.str();
}

Cuboid cuboid_from(const json& v) {
  Cuboid q = Cuboid::from_edges(to_rational(field(v, "a")), to_rational(field(v, "b")),
                                to_rational(field(v, "c")), to_rational(field(v, "d_ac")),
                                to_rational(field(v, "d_bc")), to_rational(field(v, "d_s")));
  if (v.contains("d_ab_sq")) q.d_ab_sq = to_rational(v.at("d_ab_sq"));
  return q;
}

namespace {

std::string pair_json(const RecoveredPair& p) {
  return ObjectWriter()
      .rational("X", p.X)
      .rational("Z", p.Z)
      .rational("Y", p.Y)
      .rational("W", p.W)
      .string("which", to_string(p.which))
      .str();
}

std::string pairs_json(std::initializer_list<const RecoveredPair*> pairs) {
  std::string out = "[";
  for (const auto* p : pairs) {
    if (out.size() > 1) out += ",";
    out += pair_json(*p);
  }
  return out + "]";
}

}  // namespace

std::string recovered(const RecoveredSolutions& r) {
  return ObjectWriter()
      .integer("N", r.N)
      .string("family", "invariant")
      .boolean("pc", r.perfect)
      .raw("pairs", pairs_json({&r.pairs[0], &r.pairs[1], &r.pairs[2], &r.pairs[3]}))
      .str();
}

std::string recovered(const FamilyRecovery& r) {
  return ObjectWriter()
      .integer("N", r.N)
      .string("family", to_string(r.parametrization))
      .boolean("pc", r.perfect)
      .raw("pairs", pairs_json({&r.pair, &r.reflected}))
      .str();
}

std::string record(const SearchRecord& r) {
  ObjectWriter w;
  w.integer("N", r.N).integer("k", r.k).integer("m", r.m);
  if (r.parametrization) w.string("parametrization", to_string(*r.parametrization));
  w.string("status", to_string(r.status));
  if (r.status == RecordStatus::skipped) return w.string("skip_reason", r.skip_reason).str();
  w.integer("digits", static_cast<std::int64_t>(r.digits)).boolean("pc", r.pc);
  if (r.status == RecordStatus::truncated) {
    w.boolean("truncated", true);
    if (r.X && r.Z) w.rational("X", *r.X).rational("Z", *r.Z);
    return w.str();
  }
  std::optional<CuboidSource> source;
  if (r.X && r.Z && r.parametrization) source = CuboidSource{r.N, *r.X, *r.Z, *r.parametrization};
  return w.raw("cuboid", cuboid(*r.cuboid, source)).str();
}

SearchJob job_from(const json& v, const std::string& base_dir) {
  SearchJob job;
  if (v.contains("seeds")) {
    for (const auto& s : field(v, "seeds")) job.seeds.push_back(point_from(s));
  }
  if (v.contains("seeds_file")) {
    std::filesystem::path path = field(v, "seeds_file").get<std::string>();
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    auto loaded = load_seeds(path.string());
    job.seeds.insert(job.seeds.end(), loaded.begin(), loaded.end());
  }
  if (v.contains("max_multiple")) job.max_multiple = to_integer(v.at("max_multiple")).get_si();
  if (v.contains("parity")) {
    auto parity = parse_parity(v.at("parity").get<std::string>());
    if (!parity) throw Error(Errc::parse_error, "unknown parity " + v.at("parity").dump());
    job.parity = *parity;
  }
  if (v.contains("parametrizations")) {
    job.parametrizations.clear();
    for (const auto& p : v.at("parametrizations")) {
      auto parsed = parse_parametrization(p.get<std::string>());
      if (!parsed) throw Error(Errc::parse_error, "unknown parametrization " + p.dump());
      job.parametrizations.push_back(*parsed);
    }
  }
  if (v.contains("height_limit")) job.height_limit = to_integer(v.at("height_limit")).get_ui();
  return job;
}

}  // namespace cuboid::json
