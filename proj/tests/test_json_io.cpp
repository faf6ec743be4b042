#include <filesystem>
#include <fstream>

#include "cuboid/json_io.hpp"
#include "cuboid/seeds.hpp"
#include "helpers.hpp"

using namespace cuboid;

TEST_CASE("big integers survive parsing") {
  const auto v = json::parse(R"({"n": 123456789012345678901234567890, "m": -42, "q": "-6/4"})");
  CHECK(json::to_integer(v["n"]) == Integer("123456789012345678901234567890"));
  CHECK(json::to_integer(v["m"]) == -42);
  CHECK(json::to_rational(v["q"]) == Q("-3/2"));
  CHECK(json::to_rational(v["n"]) == Rational(Integer("123456789012345678901234567890")));
  CHECK_ERRC(json::parse("{"), Errc::parse_error);
  CHECK_ERRC(json::to_integer(json::parse("true")), Errc::parse_error);
}

TEST_CASE("point records") {
  const CurvePoint p = CurvePoint::affine(CurveParams(5), Q("1681/144"), Q("-62279/1728"));
  CHECK(json::point(p) == R"({"N":5,"x":"1681/144","y":"-62279/1728"})");
  CHECK(json::point(CurvePoint::infinity(CurveParams(5))) == R"({"N":5,"infinity":true})");
  CHECK(json::point(CurvePoint::affine(CurveParams(5), Q("-4"), Q("6")), true) ==
        R"({"N":5,"x":"-4","y":"6","x_approx":"-4.000000000000","y_approx":"6.000000000000"})");
  CHECK(json::point_from(json::parse(json::point(p))) == p);
  CHECK(json::point_from(json::parse(R"({"N":5,"x":-4,"y":6})")) == CurvePoint::affine(CurveParams(5), -4, 6));
  CHECK(json::point_from(json::parse(R"({"N":5,"infinity":true})")).is_infinity());
  CHECK_ERRC(json::point_from(json::parse(R"({"x":"1","y":"1"})")), Errc::parse_error);
}

TEST_CASE("cuboid records") {
  const Cuboid q = Cuboid::from_edges(9840, 4557, 3124, 10324, 5525, 11285);
  CHECK(json::cuboid(q) ==
        R"({"a":9840,"b":4557,"c":3124,"d_ac":10324,"d_bc":5525,"d_s":11285,"d_ab_sq":117591849,"pc":false})");
  const std::string with_source =
      json::cuboid(q, json::CuboidSource{5, Q("25/4"), Q("1681/144"), Parametrization::invariant});
  CHECK(with_source.find(R"("source":{"N":5,"X":"25/4","Z":"1681/144","parametrization":"invariant"})") !=
        std::string::npos);
  CHECK(json::cuboid_from(json::parse(with_source)) == q);
  // Huge entries round-trip exactly.
  const Integer big("98765432109876543210987654321");
  const Cuboid h = Cuboid::from_edges(big, Integer(big + 1), Integer(big + 2), Integer(big + 3), Integer(big + 4), Integer(big + 5));
  CHECK(json::cuboid_from(json::parse(json::cuboid(h))) == h);
}

TEST_CASE("recovery and search records") {
  const Cuboid q = Cuboid::from_edges(672, 153, 104, 680, 185, 697);
  const std::string inv = json::recovered(recover_invariant(q));
  CHECK(inv.rfind(R"({"N":34,"family":"invariant","pc":false,"pairs":[{"X":"833/16","Z":"153/4")", 0) == 0);
  const auto parsed = json::parse(inv);
  CHECK(parsed["pairs"].size() == 4);
  CHECK(parsed["pairs"][3]["which"] == "IV");
  const auto first = json::parse(json::recovered(recover_first(q)));
  CHECK(json::to_integer(first["N"]) == 4305);
  CHECK(first["family"] == "first");

  SearchRecord skip;
  skip.N = 5;
  skip.status = RecordStatus::skipped;
  skip.skip_reason = "none";
  CHECK(json::record(skip) == R"({"N":5,"k":0,"m":0,"status":"skipped","skip_reason":"none"})");

  SearchJob j;
  j.seeds = {CurvePoint::affine(CurveParams(5), -4, 6)};
  j.max_multiple = 3;
  j.parametrizations = {Parametrization::invariant};
  const auto records = run_search(j);
  REQUIRE(records.size() == 1);
  const auto rec = json::parse(json::record(records[0]));
  CHECK(rec["status"] == "ok");
  CHECK(rec["parametrization"] == "invariant");
  CHECK(json::cuboid_from(rec["cuboid"]) == *records[0].cuboid);
  CHECK(rec["cuboid"]["source"]["X"] == "-4");
}

TEST_CASE("search jobs") {
  const auto v = json::parse(R"({"seeds_file":"seeds.jsonl","max_multiple":6,"parity":"odd",
                                  "parametrizations":["invariant","first"],"height_limit":40})");
  const SearchJob j = json::job_from(v, CUBOID_DATA_DIR);
  CHECK(j.seeds.size() == 4);
  CHECK(j.max_multiple == 6);
  CHECK(j.parity == Parity::odd);
  CHECK(j.parametrizations == std::vector<Parametrization>{Parametrization::invariant, Parametrization::first});
  CHECK(j.height_limit == 40);

  const auto inline_job = json::job_from(json::parse(R"({"seeds":[{"N":7,"x":"25","y":"120"}]})"));
  CHECK(inline_job.seeds.size() == 1);
  CHECK(inline_job.max_multiple == 2);
  CHECK_ERRC(json::job_from(json::parse(R"({"parity":"sometimes"})")), Errc::parse_error);
  CHECK_ERRC(json::job_from(json::parse(R"({"parametrizations":["third"]})")), Errc::parse_error);
}

TEST_CASE("seed files") {
  const auto seeds = load_seeds(std::string(CUBOID_DATA_DIR) + "/seeds.jsonl");
  REQUIRE(seeds.size() == 4);
  const auto defaults = default_seeds();
  for (std::size_t i = 0; i < seeds.size(); ++i) CHECK(seeds[i] == defaults[i]);
  CHECK(parse_seeds("# comment\n\n{\"N\":6,\"x\":\"-3\",\"y\":\"9\"}\n").size() == 1);
  CHECK_ERRC(parse_seeds("{\"N\":5,\"x\":\"1\",\"y\":\"1\"}\n"), Errc::invalid_seed);
  CHECK_ERRC(parse_seeds("{\"N\":5,\"x\":\"1\"\n"), Errc::parse_error);
  CHECK_ERRC(load_seeds("/nonexistent/seeds.jsonl"), Errc::parse_error);
}
