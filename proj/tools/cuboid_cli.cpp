// cuboid: command-line front end for the congruent-curve and cuboid library.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 resource
// exhaustion (factorization budget or height limit).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cuboid/cuboid.hpp"
#include "cuboid/curve.hpp"
#include "cuboid/error.hpp"
#include "cuboid/factor.hpp"
#include "cuboid/inverse.hpp"
#include "cuboid/json_io.hpp"
#include "cuboid/search.hpp"
#include "cuboid/seeds.hpp"

using namespace cuboid;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool approx = false;
  bool pretty = false;
};

// Human-readable rendering: one "path  value" row per scalar.
void flatten(const nlohmann::json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, rows);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, v.is_string() ? v.get<std::string>() : v.dump());
  }
}

void emit(const Globals& g, const std::string& json_text) {
  if (!g.pretty) {
    std::cout << json_text << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(json::parse(json_text), "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

Rational rational_arg(const std::string& text) { return Rational::parse(text); }

CurvePoint point_arg(const std::string& n, const std::string& x, const std::string& y) {
  return CurvePoint::affine(CurveParams(parse_integer(n)), rational_arg(x), rational_arg(y));
}

CurvePoint checked(const CurvePoint& p) {
  if (!on_curve(p)) {
    throw Error(Errc::not_on_curve, "(" + p.x().str() + ", " + p.y().str() + ") is not on C_" + p.curve().N().get_str());
  }
  return p;
}

std::string read_text(const std::string& path) {
  std::ostringstream out;
  if (path == "-") {
    out << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    out << in.rdbuf();
  }
  return out.str();
}

std::string approx_pair(const RecoveredPair& p, bool approx) {
  json::ObjectWriter w;
  w.rational("X", p.X).rational("Z", p.Z).rational("Y", p.Y).rational("W", p.W).string("which", to_string(p.which));
  if (approx) w.string("X_approx", p.X.approx()).string("Z_approx", p.Z.approx());
  return w.str();
}

std::string recovery_json(const Integer& N, std::string_view family, bool pc, const std::vector<const RecoveredPair*>& pairs,
                          bool approx) {
  std::string list = "[";
  for (const auto* p : pairs) list += (list.size() > 1 ? "," : "") + approx_pair(*p, approx);
  list += "]";
  return json::ObjectWriter().integer("N", N).string("family", family).boolean("pc", pc).raw("pairs", list).str();
}

// ---------------------------------------------------------------- point

struct PointArgs {
  std::string n, x, y, x2, y2;
  std::int64_t k = 0;
};

void add_point_options(CLI::App* sub, PointArgs& a) {
  sub->add_option("--N", a.n, "curve parameter N")->required();
  sub->add_option("--x", a.x, "x-coordinate (p/q)")->required();
  sub->add_option("--y", a.y, "y-coordinate (p/q)")->required();
}

int run_point(const std::string& op, const PointArgs& a, const Globals& g) {
  const CurvePoint p = point_arg(a.n, a.x, a.y);
  if (op == "check") {
    const bool ok = on_curve(p);
    emit(g, json::ObjectWriter()
                .integer("N", p.curve().N())
                .rational("x", p.x())
                .rational("y", p.y())
                .boolean("on_curve", ok)
                .boolean("trivial", ok && p.is_trivial())
                .str());
    return ok ? kOk : kDomain;
  }
  checked(p);
  CurvePoint r = p;
  if (op == "add") {
    r = add(p, checked(point_arg(a.n, a.x2, a.y2)));
  } else if (op == "double") {
    r = double_point(p);
  } else if (op == "mul") {
    r = mul(a.k, p);
  } else if (op == "reflect1") {
    r = reflect_first(p);
  } else if (op == "reflect2") {
    r = reflect_second(p);
  } else if (op == "reflect3") {
    r = reflect_third(p);
  }
  emit(g, json::point(r, g.approx));
  return kOk;
}

// ---------------------------------------------------------------- npc

struct NpcArgs {
  std::string n, x, z, param = "invariant";
  std::string a, b, c, dac, dbc, ds, file;
};

SolutionPair pair_from_x(const std::string& n, const std::string& x, const std::string& z) {
  const CurveParams curve(parse_integer(n));
  auto lift = [&](const Rational& v) {
    const Rational rhs = curve_rhs(curve, v);
    if (!is_square(rhs)) throw Error(Errc::not_on_curve, "x = " + v.str() + " is not an x-coordinate on C_" + curve.N().get_str());
    return CurvePoint::affine(curve, v, sqrt_exact(rhs));
  };
  return SolutionPair::make(lift(rational_arg(x)), lift(rational_arg(z)));
}

int run_generate(const NpcArgs& a, const Globals& g) {
  std::vector<Parametrization> params;
  if (a.param == "all") {
    params.assign(kAllParametrizations.begin(), kAllParametrizations.end());
  } else if (auto p = parse_parametrization(a.param)) {
    params.push_back(*p);
  } else {
    throw UsageError("unknown parametrization " + a.param);
  }
  const SolutionPair pair = pair_from_x(a.n, a.x, a.z);
  for (auto p : params) {
    emit(g, json::cuboid(build_npc(pair, p), json::CuboidSource{pair.N(), pair.X(), pair.Z(), p}));
  }
  return kOk;
}

Cuboid cuboid_from_flags(const NpcArgs& a) {
  for (const std::string* s : {&a.a, &a.b, &a.c, &a.dac, &a.dbc, &a.ds}) {
    if (s->empty()) throw UsageError("need --a --b --c --dac --dbc --ds, or --file");
  }
  return Cuboid::from_edges(rational_arg(a.a), rational_arg(a.b), rational_arg(a.c), rational_arg(a.dac),
                            rational_arg(a.dbc), rational_arg(a.ds));
}

int run_verify(const NpcArgs& a, const Globals& g) {
  const Cuboid q = a.file.empty() ? cuboid_from_flags(a) : json::cuboid_from(json::parse(read_text(a.file)));
  const auto violated = verify_npc(q);
  std::string list = "[";
  for (auto r : violated) list += (list.size() > 1 ? ",\"" : "\"") + std::string(to_string(r)) + "\"";
  list += "]";
  emit(g, json::ObjectWriter().boolean("valid", violated.empty()).raw("violations", list).boolean("pc", pc_condition(q)).str());
  return violated.empty() ? kOk : kDomain;
}

// ---------------------------------------------------------------- invert

struct InvertArgs {
  NpcArgs sides;
  std::string family = "invariant";
  bool auto_label = false;
};

int run_invert(const InvertArgs& a, const Globals& g) {
  Cuboid q;
  if (a.auto_label) {
    for (const std::string* s : {&a.sides.a, &a.sides.b, &a.sides.c}) {
      if (s->empty()) throw UsageError("--auto-label needs --a --b --c");
    }
    auto labelled = label_npc({rational_arg(a.sides.a), rational_arg(a.sides.b), rational_arg(a.sides.c)});
    if (!labelled) throw Error(Errc::not_an_npc, "no labelling of the sides gives a nearly-perfect cuboid");
    q = *labelled;
  } else {
    q = cuboid_from_flags(a.sides);
  }
  const FactorConfig config = FactorConfig::from_environment();
  if (a.family == "invariant") {
    const RecoveredSolutions r = recover_invariant(q, config);
    emit(g, recovery_json(r.N, "invariant", r.perfect, {&r.pairs[0], &r.pairs[1], &r.pairs[2], &r.pairs[3]}, g.approx));
  } else if (a.family == "first" || a.family == "second") {
    const FamilyRecovery r = a.family == "first" ? recover_first(q, config) : recover_second(q, config);
    emit(g, recovery_json(r.N, to_string(r.parametrization), r.perfect, {&r.pair, &r.reflected}, g.approx));
  } else {
    throw UsageError("unknown family " + a.family);
  }
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::string job_file, out, seeds;
  unsigned workers = 1;
  bool resume = false;
};

/// Number of complete lines already in `path`; a partial last line is cut off.
std::size_t completed_lines(const std::string& path, std::string& last_line) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return 0;
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const std::size_t end = text.rfind('\n');
  const std::size_t keep = end == std::string::npos ? 0 : end + 1;
  if (keep != text.size()) std::filesystem::resize_file(path, keep);
  std::size_t lines = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < keep; ++i) {
    if (text[i] != '\n') continue;
    ++lines;
    last_line = text.substr(start, i - start);
    start = i + 1;
  }
  return lines;
}

int run_search_cmd(const SearchArgs& a, const Globals& g) {
  if (!std::filesystem::exists(a.job_file)) throw UsageError("job file not found: " + a.job_file);
  const auto base = std::filesystem::path(a.job_file).parent_path().string();
  SearchJob job = json::job_from(json::parse(read_text(a.job_file)), base.empty() ? "." : base);
  if (!a.seeds.empty()) job.seeds = load_seeds(a.seeds);
  job.validate();

  SearchOptions options{a.workers, 0};
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.out.empty()) {
    if (a.resume) {
      std::string last;
      options.resume_from = completed_lines(a.out, last);
      if (options.resume_from > 0) {
        const auto keys = task_keys(job);
        if (options.resume_from > keys.size()) throw UsageError(a.out + " has more records than the job has tasks");
        const auto rec = json::parse(last);
        const TaskKey& expected = keys[options.resume_from - 1];
        const bool match = json::to_integer(rec.at("N")) == expected.N && rec.at("k").get<std::int64_t>() == expected.k &&
                           rec.at("m").get<std::int64_t>() == expected.m;
        if (!match) throw UsageError(a.out + " was not produced by this job");
      }
      file.open(a.out, std::ios::app | std::ios::binary);
    } else {
      file.open(a.out, std::ios::trunc | std::ios::binary);
    }
    if (!file) throw UsageError("cannot write " + a.out);
    out = &file;
  } else if (a.resume) {
    throw UsageError("--resume needs --out");
  }

  bool truncated = false;
  run_search(job, options, [&](const SearchRecord& r) {
    truncated = truncated || r.status == RecordStatus::truncated;
    if (g.pretty && out == &std::cout) {
      emit(g, json::record(r));
      std::cout << "\n";
    } else {
      *out << json::record(r) << "\n";
    }
    out->flush();
  });
  if (truncated) {
    std::cerr << "cuboid: some cuboids exceeded height_limit " << job.height_limit << " and were truncated\n";
    return kExhausted;
  }
  return kOk;
}

// ---------------------------------------------------------------- kummer

struct KummerArgs {
  std::string n, x, y, z, w;
};

int run_kummer(const KummerArgs& a, const Globals& g) {
  const CurveParams curve(parse_integer(a.n));
  const SolutionPair pair = SolutionPair::make(CurvePoint::affine(curve, rational_arg(a.x), rational_arg(a.y)),
                                               CurvePoint::affine(curve, rational_arg(a.z), rational_arg(a.w)));
  const KummerPoint k = kummer_map(pair);
  const bool holds = kummer_identity_holds(k);
  json::ObjectWriter w;
  w.rational("xi", k.xi).rational("zeta", k.zeta).rational("eta", k.eta).boolean("identity", holds);
  if (g.approx) w.string("xi_approx", k.xi.approx()).string("zeta_approx", k.zeta.approx()).string("eta_approx", k.eta.approx());
  emit(g, w.str());
  return holds ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nearly-perfect cuboids from congruent curves"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_flag("--approx", g.approx, "append decimal renderings of rational coordinates");
  app.add_flag("--pretty", g.pretty, "human-readable output instead of JSON");

  std::function<int()> action;

  auto* point = app.add_subcommand("point", "curve point operations");
  point->require_subcommand(1);
  PointArgs pa;
  for (const char* op : {"add", "double", "mul", "reflect1", "reflect2", "reflect3", "check"}) {
    auto* sub = point->add_subcommand(op);
    add_point_options(sub, pa);
    if (std::string(op) == "add") {
      sub->add_option("--x2", pa.x2, "second point x")->required();
      sub->add_option("--y2", pa.y2, "second point y")->required();
    }
    if (std::string(op) == "mul") sub->add_option("-k", pa.k, "multiplier")->required();
    sub->callback([&, op] { action = [&, op] { return run_point(op, pa, g); }; });
  }

  auto* npc = app.add_subcommand("npc", "build or check nearly-perfect cuboids");
  npc->require_subcommand(1);
  NpcArgs na;
  auto* gen = npc->add_subcommand("generate", "cuboid from a solution pair given by X and Z");
  gen->add_option("--N", na.n)->required();
  gen->add_option("--X", na.x)->required();
  gen->add_option("--Z", na.z)->required();
  gen->add_option("--param", na.param, "first|first_reflected|second|second_reflected|invariant|all");
  gen->callback([&] { action = [&] { return run_generate(na, g); }; });
  auto* ver = npc->add_subcommand("verify", "check the cuboid relations");
  for (auto [flag, slot] : std::initializer_list<std::pair<const char*, std::string*>>{
           {"--a", &na.a}, {"--b", &na.b}, {"--c", &na.c}, {"--dac", &na.dac}, {"--dbc", &na.dbc}, {"--ds", &na.ds}}) {
    ver->add_option(flag, *slot);
  }
  ver->add_option("--file", na.file, "cuboid JSON record ('-' for stdin)");
  ver->callback([&] { action = [&] { return run_verify(na, g); }; });

  auto* inv = app.add_subcommand("invert", "recover N and solution pairs from a cuboid");
  InvertArgs ia;
  for (auto [flag, slot] : std::initializer_list<std::pair<const char*, std::string*>>{
           {"--a", &ia.sides.a}, {"--b", &ia.sides.b}, {"--c", &ia.sides.c},
           {"--dac", &ia.sides.dac}, {"--dbc", &ia.sides.dbc}, {"--ds", &ia.sides.ds}}) {
    inv->add_option(flag, *slot);
  }
  inv->add_option("--family", ia.family, "invariant|first|second");
  inv->add_flag("--auto-label", ia.auto_label, "take --a --b --c in any order and find the labelling");
  inv->callback([&] { action = [&] { return run_invert(ia, g); }; });

  auto* search = app.add_subcommand("search", "run a search job, writing JSONL");
  SearchArgs sa;
  search->add_option("job", sa.job_file, "job JSON file")->required();
  search->add_option("--workers", sa.workers, "worker threads");
  search->add_option("--out", sa.out, "output JSONL file (default stdout)");
  search->add_flag("--resume", sa.resume, "continue an interrupted --out file");
  search->add_option("--seeds", sa.seeds, "seed JSONL file replacing the job's seeds");
  search->callback([&] { action = [&] { return run_search_cmd(sa, g); }; });

  auto* kummer = app.add_subcommand("kummer", "map a solution pair to the Kummer surface");
  KummerArgs ka;
  kummer->add_option("--N", ka.n)->required();
  kummer->add_option("--X", ka.x)->required();
  kummer->add_option("--Y", ka.y)->required();
  kummer->add_option("--Z", ka.z)->required();
  kummer->add_option("--W", ka.w)->required();
  kummer->callback([&] { action = [&] { return run_kummer(ka, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "cuboid: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "cuboid: " << e.what() << "\n";
    return e.code() == Errc::factorization_exceeded ? kExhausted : kDomain;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "cuboid: " << e.what() << "\n";
    return kDomain;
  }
}
