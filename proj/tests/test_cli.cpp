#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "confbound/cli.hpp"
#include "confbound/domain_json.hpp"
#include "confbound/errors.hpp"

using namespace confbound;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = CONFBOUND_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("scalar expressions") {
  CHECK(parse_scalar_expression("1") == 1.0);
  CHECK(parse_scalar_expression(" 1/3 ") == 1.0 / 3.0);
  CHECK(parse_scalar_expression("ln(2)") == std::log(2.0));
  CHECK(parse_scalar_expression("ln(sqrt(2))") == std::log(std::sqrt(2.0)));
  CHECK(parse_scalar_expression("-2*(1+pi)") == -2.0 * (1.0 + 3.141592653589793));
  CHECK(parse_scalar_expression("exp(1) - e") == 0.0);
  CHECK(parse_scalar_expression("1e-3") == 1e-3);
  CHECK_THROWS_AS(parse_scalar_expression(""), SpecError);
  CHECK_THROWS_AS(parse_scalar_expression("1/"), SpecError);
  CHECK_THROWS_AS(parse_scalar_expression("foo(1)"), SpecError);
  CHECK_THROWS_AS(parse_scalar_expression("(1"), SpecError);
  CHECK_THROWS_AS(parse_scalar_expression("1 2"), SpecError);

  CHECK(parse_value_list("1,0.5, ln(2)") == std::vector<double>{1.0, 0.5, std::log(2.0)});
  CHECK_THROWS_AS(parse_value_list(""), SpecError);
  CHECK_THROWS_AS(parse_value_list(" , "), SpecError);
}

TEST_CASE("every shipped fixture round-trips and computes") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    CAPTURE(entry.path().string());
    const std::string text = read_file(entry.path());
    const NamedSpec spec = parse_domain_spec(text);
    const std::string dumped = dump_domain_spec(spec);
    CHECK(nlohmann::json::parse(dumped) == nlohmann::json::parse(text));
    CHECK(dump_domain_spec(parse_domain_spec(dumped)) == dumped);
    const Run r = run({"bounds", "--spec", entry.path().string(), "--out", "csv"});
    CHECK(r.code == kExitOk);
  }
  CHECK(seen >= 4);
}

TEST_CASE("compose maps apply right to left") {
  const NamedSpec s = parse_domain_spec(R"({"base": {"type": "disc", "center": [0, 0], "radius": 1},
      "map": {"type": "compose", "maps": [{"type": "exp"}, {"type": "affine", "a": 2, "b": [0, 1]}]}})");
  const Complex z(0.1, 0.2);
  CHECK(std::abs(s.spec.map(z) - std::exp(2.0 * z + Complex(0.0, 1.0))) < 1e-14);
  // [0, 0] normalizes to a plain number.
  CHECK(nlohmann::json::parse(dump_domain_spec(s))["base"]["center"] == 0.0);
}

TEST_CASE("malformed specs are input errors") {
  CHECK_THROWS_AS(parse_domain_spec("{"), SpecError);
  CHECK_THROWS_AS(parse_domain_spec("[]"), SpecError);
  CHECK_THROWS_AS(parse_domain_spec(R"({"base": {"type": "disc", "radius": 1}})"), SpecError);
  CHECK_THROWS_AS(parse_domain_spec(R"({"base": {"type": "square"}, "map": {"type": "identity"}})"), SpecError);
  CHECK_THROWS_AS(parse_domain_spec(R"({"base": {"type": "disc", "radius": -1}, "map": {"type": "identity"}})"),
                  SpecError);
  CHECK_THROWS_AS(parse_domain_spec(R"({"base": {"type": "disc", "radius": 1}, "map": {"type": "tan"}})"), SpecError);
  CHECK_THROWS_AS(
      parse_domain_spec(R"({"base": {"type": "disc", "radius": 1}, "map": {"type": "identity"}, "extra": 1})"),
      SpecError);
  CHECK_THROWS_AS(parse_domain_spec(R"({"base": {"type": "disc", "radius": 1}, "map": {"type": "power", "n": 1.5}})"),
                  SpecError);
}

TEST_CASE("bounds command output") {
  const Run r = run({"bounds", "--spec", (kFixtures / "exp_ln2.json").string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("Makai                      1.000") != std::string::npos);
  CHECK(r.out.find("RFK                        3.855") != std::string::npos);
  CHECK(r.out.find("TheoremA                   5.386") != std::string::npos);
  CHECK(r.out.find("best: TheoremA") != std::string::npos);

  const Run disc = run({"bounds", "--spec", (kFixtures / "identity_disc.json").string(), "--out", "csv"});
  REQUIRE(disc.code == kExitOk);
  const auto rows = lines(disc.out);
  CHECK(rows.front() == "method,value,valid,preconditions,notes");
  bool saw_theorem_a = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::count(rows[i].begin(), rows[i].end(), ',') == 4);
    if (rows[i].rfind("TheoremA,", 0) == 0) {
      saw_theorem_a = true;
      CHECK(rows[i].rfind("TheoremA,5.78319,1,", 0) == 0);
    }
  }
  CHECK(saw_theorem_a);
}

TEST_CASE("table command") {
  const Run r = run({"table", "--example", "sin", "--d", "0.5,1/3,0.25,0.125", "--out", "csv"});
  REQUIRE(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "method,d=0.5,d=0.333333,d=0.25,d=0.125");
  CHECK(rows[1] == "Makai,1,2.25,4,16");

  const Run text = run({"table", "--example", "exp", "--d", "ln(2)"});
  REQUIRE(text.code == kExitOk);
  CHECK(text.out.find("5.386") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"bounds", "--spec", "/nonexistent/spec.json"}).code == kExitInputError);
  CHECK(run({"bounds", "--spec", temp_file("confbound_bad.json", "{ not json").string()}).code == kExitInputError);
  CHECK(run({"table", "--example", "exp", "--d", ""}).code == kExitInputError);
  CHECK(run({"table", "--example", "exp", "--d", "1,-2"}).code == kExitInputError);
  CHECK(run({"table", "--example", "tan", "--d", "1"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"bounds"}).code == kExitInputError);
  CHECK(run({"bounds", "--spec", (kFixtures / "exp_d1.json").string(), "--alphas", "1.5"}).code == kExitInputError);
  CHECK(run({"oracle", "--spec", (kFixtures / "square.json").string(), "--h", "-1"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);

  const Run gap = run({"gap", "--spec", (kFixtures / "exp_d1.json").string()});
  CHECK(gap.code == kExitComputationError);
  CHECK(gap.err.find("gap bound requires unit-disc base") != std::string::npos);
  CHECK(run({"gap", "--spec", (kFixtures / "scaled_disc.json").string()}).code == kExitComputationError);
}

TEST_CASE("gap command") {
  const Run r = run({"gap", "--spec", (kFixtures / "disc_convex.json").string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("Gap                        8.899") != std::string::npos);
  CHECK(r.out.find("GapConvex                  8.899") != std::string::npos);
  CHECK(r.out.find("gamma_inf=") != std::string::npos);
  CHECK(r.out.find("l2_dev=0") != std::string::npos);
}

TEST_CASE("check-regularity and oracle commands") {
  const Run reg = run({"check-regularity", "--spec", (kFixtures / "exp_d1.json").string(), "--alphas", "3,10",
                       "--out", "csv"});
  REQUIRE(reg.code == kExitOk);
  const auto rows = lines(reg.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "alpha,value,finite");
  CHECK(rows[1].rfind("3,", 0) == 0);

  const Run orc = run({"oracle", "--spec", (kFixtures / "square.json").string(), "--h", "1/32", "--k", "2",
                       "--out", "csv"});
  REQUIRE(orc.code == kExitOk);
  const auto o = lines(orc.out);
  REQUIRE(o.size() == 3);
  CHECK(o[0] == "index,eigenvalue,residual");

  const Run val = run({"oracle", "--spec", (kFixtures / "identity_disc.json").string(), "--h", "1/32", "--validate"});
  CHECK(val.code == kExitOk);
  CHECK(val.out.find("pass") != std::string::npos);
}
