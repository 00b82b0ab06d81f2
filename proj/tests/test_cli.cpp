#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cli_golden.hpp"
#include "salemkit/cli.hpp"
#include "salemkit/error.hpp"
#include "test_util.hpp"

using namespace salemkit;
using salemkit::cli::parse_poly;
using salemkit::cli::parse_rational;
using salemkit::testing::desc;

namespace {

struct InProcess {
  int code;
  std::string out, err;
};

InProcess run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  return std::filesystem::temp_directory_path() / ("salemkit_test_cli_" + std::to_string(::getpid()));
}

}  // namespace

TEST_CASE("parse polynomials") {
  CHECK(parse_poly("1,-3,1") == desc({1, -3, 1}));
  CHECK(parse_poly(" 1, -3, 1 ") == desc({1, -3, 1}));
  CHECK(parse_poly("t^6 - t^5 - t^4 + t^3 - t^2 - t + 1") == testing::kSextic);
  CHECK(parse_poly("t^6 - t^5 - t^4 + t^3 - t^2 - t + 1") == parse_poly("1,-1,-1,1,-1,-1,1"));
  CHECK(parse_poly("x^2-3x+1") == desc({1, -3, 1}));
  CHECK(parse_poly("-t^2 + 2*t") == desc({-1, 2, 0}));
  CHECK(parse_poly("3") == desc({3}));
  CHECK(parse_poly("t + t") == desc({2, 0}));
  CHECK(parse_poly("12345678901234567890t + 1") == IntPoly(std::vector<Integer>{1, Integer("12345678901234567890")}));

  for (const char* bad : {"1,0.5,1", "", "t^", "t^2 3t", "1,,1", "1,-3,", "0.5t", "t^2 + 1/2", "t^2 + x", "abc", "1e3",
                          "2**t"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad), Error);
  }
  try {
    parse_poly("1,0.5,1");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("non-integer") != std::string::npos);
  }
}

TEST_CASE("format and parse round trip") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> deg(0, 12), coef(-20, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) x = coef(rng);
    c.back() = c.back() == 0 ? Integer(1) : c.back();
    const IntPoly p(c);
    REQUIRE(parse_poly(to_string(p)) == p);
    std::string list;
    for (const auto& x : p.descending()) list += (list.empty() ? "" : ",") + x.get_str();
    REQUIRE(parse_poly(list) == p);
  }
}

TEST_CASE("parse tolerances") {
  CHECK(parse_rational("1/1000") == testing::rat(1, 1000));
  CHECK(parse_rational("1e-12") == testing::pow10_neg(12));
  CHECK(parse_rational("0.000001") == testing::pow10_neg(6));
  CHECK(parse_rational("2.5E1") == 25);
  CHECK(parse_rational("-3/6") == testing::rat(-1, 2));
  for (const char* bad : {"", "1/0", "abc", "1e", ".", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("decimal formatting") {
  CHECK(cli::format_decimal(2.6180339887498948) == "2.61803398875");
  CHECK(cli::format_decimal(0.962423650119206895) == "0.962423650119");
}

TEST_CASE("subcommand output") {
  SUBCASE("classify") {
    const auto r = run({"classify", "t^2-3t+1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("salem: yes") != std::string::npos);
    CHECK(r.out.find("lambda: 2.61803398875") != std::string::npos);
    CHECK(r.out.find("entropy: 0.962423650119") != std::string::npos);
  }
  SUBCASE("torus prints the square-property values") {
    const auto r = run({"torus", "1,-1,-1,-1,-1,-1,1"});
    CHECK(r.code == 2);
    CHECK(r.out.find("Q(1) = -3, Q(-1) = 3") != std::string::npos);
    const auto ok = run({"torus", "t^2-3t+1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("P = t^4 + 3t^2 + 1") != std::string::npos);
  }
  SUBCASE("enumerate json has Lehmer first") {
    const auto r = run({"enumerate", "--degree", "10", "--bound", "1", "--json"});
    REQUIRE(r.code == 0);
    const auto j = serialize::Json::parse(r.out);
    CHECK(j["schema"] == cli::kReportSchema);
    CHECK(j["result"]["count"] == 19);
    CHECK(serialize::poly_from(j["result"]["entries"][0]["polynomial"]) == testing::kLehmer);
  }
  SUBCASE("trace") {
    const auto r = run({"trace", "t^4-t^3-t^2-t+1", "--json"});
    REQUIRE(r.code == 0);
    const auto j = serialize::Json::parse(r.out);
    CHECK(serialize::poly_from(j["result"]["trace_polynomial"]) == desc({1, -1, -3}));
    CHECK(run({"trace", "t^3+1"}).code == 1);
  }
  SUBCASE("entropy") {
    CHECK(run({"entropy", "t^2+1"}).out.find("entropy: 0 ") != std::string::npos);
    CHECK(run({"entropy", "t^2+3t+1"}).code == 1);
    CHECK(run({"entropy", "t^4-t^3-t^2-t+1", "--tol", "1/1000000"}).code == 0);
    CHECK(run({"entropy", "t^2-3t+1", "--tol", "0"}).code == 1);
  }
  SUBCASE("k3") {
    const auto r = run({"k3", "t^2-3t+1", "--json"});
    CHECK(r.code == 0);
    CHECK(serialize::Json::parse(r.out)["result"]["verdict"] == "realizable_kummer");
  }
  SUBCASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"enumerate", "--degree", "4"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }
}

TEST_CASE("witness files") {
  const auto dir = scratch();
  std::filesystem::create_directories(dir);
  const auto path = (dir / "w.json").string();
  const auto r = run({"torus", "t^4-t^3-t^2-t+1", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(run({"verify", path}).code == 0);

  auto doc = serialize::Json::parse(std::ifstream(path));
  const auto w = serialize::witness_from(doc);
  CHECK(w.kind == torus::Case::kDeg4a);
  CHECK(torus::verify_witness(w).all_passed());

  doc["F2"][0][0] = 7;
  std::ofstream(path) << doc.dump();
  CHECK(run({"verify", path}).code == 2);

  std::ofstream(path) << "{not json";
  CHECK(run({"verify", path}).code == 1);
  std::ofstream(path) << R"({"case": "deg9"})";
  CHECK(run({"verify", path}).code == 1);
  CHECK(run({"verify", (dir / "missing.json").string()}).code == 1);

  SUBCASE("isometry files") {
    const auto f2 = torus::decide_torus(testing::kSextic).witness->f2;
    serialize::IsometryFile iso{std::string("sextic"), lattice::Gram(torus::wedge_gram()), f2};
    std::ofstream(path) << serialize::isometry_json(iso).dump();
    const auto ok = run({"verify", path, "--json"});
    CHECK(ok.code == 0);
    const auto j = serialize::Json::parse(ok.out);
    CHECK(j["result"]["mechanics"]["all_passed"] == true);
    CHECK(j["result"]["mechanics"]["ambient_signature"] == serialize::Json::array({3, 11}));

    iso.matrix(0, 0) += 1;
    std::ofstream(path) << serialize::isometry_json(iso).dump();
    CHECK(run({"verify", path}).code == 2);

    std::ofstream(path) << R"({"gram": [[2, 1], [1, 2]], "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})";
    CHECK(run({"verify", path}).code == 1);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("json integers") {
  CHECK(serialize::integer_json(Integer(5)) == 5);
  CHECK(serialize::integer_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(serialize::integer_from(serialize::Json("-77")) == -77);
  CHECK_THROWS_AS(serialize::integer_from(serialize::Json(1.5)), Error);
  CHECK_THROWS_AS(serialize::integer_from(serialize::Json("12a")), Error);
  CHECK(serialize::rational_from(serialize::Json("6/4")) == testing::rat(3, 2));
}

TEST_CASE("binary: golden exit codes and deterministic json") {
  const std::string bin = SALEMKIT_CLI_PATH;
  const auto dir = scratch() / "golden";
  const auto [good, bad] = testing::write_witness_fixtures(dir);
  for (const auto& g : testing::golden_cases(good, bad)) {
    CAPTURE(g.args.front());
    CAPTURE(g.args.back());
    CHECK(testing::run_binary(bin, g.args).exit_code == g.exit_code);
  }
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"classify", "t^6-t^5-t^4+t^3-t^2-t+1", "--json"},
        std::vector<std::string>{"torus", "t^4-t^3-t^2-t+1", "--json"},
        std::vector<std::string>{"enumerate", "--degree", "6", "--bound", "2", "--json"}}) {
    const auto a = testing::run_binary(bin, args);
    const auto b = testing::run_binary(bin, args);
    REQUIRE(a.exit_code == 0);
    CHECK(testing::strip_timing(a.out) == testing::strip_timing(b.out));
  }
  std::filesystem::remove_all(scratch());
}
