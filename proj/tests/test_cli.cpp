#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

// invokes the tool binary next to the test executable (ctest runs in the
// build directory)
namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = "./bcwtool " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

using Json = nlohmann::ordered_json;

}  // namespace

TEST_CASE("quotient table over the gaussian integers") {
  RunResult r = run("dr table --field \"x^2+1\" --modulus \"2\"");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("version") == "1.0.0");
  CHECK(j.at("size") == 3);
  CHECK(j.at("table").size() == 3);
  CHECK(j.at("elements").size() == 3);
  // all constructions give the same table
  for (const char* c : {"b", "c"}) {
    RunResult r2 = run(std::string("dr table --field \"x^2+1\" --modulus "
                                   "\"2\" --construction ") +
                       c);
    REQUIRE(r2.exit_code == 0);
    CHECK(Json::parse(r2.out).at("size") == 3);
  }
}

TEST_CASE("exit codes by error class") {
  CHECK(run("field new --poly \"x^2-x\"").exit_code == 1);    // reducible
  CHECK(run("field new --poly \"x^2-4\"").exit_code == 1);    // reducible
  CHECK(run("nonsense").exit_code == 3);                      // usage
  CHECK(run("field new").exit_code == 3);                     // missing option
  CHECK(run("dr table --field \"x^2+1\"").exit_code == 3);
  CHECK(run("witt ghost --data 'not json'").exit_code == 3);
  CHECK(run("witt ghost --data '{\"S\":[2,4],\"x\":{}}'").exit_code == 1);
  CHECK(run("witt frobcheck --level 4 --prime 2").exit_code == 1);
  // documented impossibility at rational level 4
  CHECK(run("endo verify --field \"x\" --modulus \"4\"").exit_code == 1);
}

TEST_CASE("field payload carries exact invariants") {
  RunResult r = run("field new --poly \"x^2+1\"");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("discriminant") == "-4");
  CHECK(j.at("signature") == Json::array({0, 1}));
  CHECK(j.at("torsion_order") == "4");
}

TEST_CASE("ghost inversion worked example") {
  RunResult r = run("witt unghost --data '{\"S\":[1,2],\"w\":{\"1\":\"2\","
                    "\"2\":\"2\"}}'");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("x").at("1") == "2");
  CHECK(j.at("x").at("2") == "-1");
}

TEST_CASE("membership queries") {
  RunResult bad = run("witt member --data '{\"S\":[1,2],\"w\":{\"1\":\"0\","
                      "\"2\":\"1\"}}'");
  REQUIRE(bad.exit_code == 0);
  CHECK(Json::parse(bad.out).at("member") == false);
  RunResult good = run("witt member --data '{\"S\":[1,2],\"w\":{\"1\":\"1\","
                       "\"2\":\"1\"}}'");
  REQUIRE(good.exit_code == 0);
  CHECK(Json::parse(good.out).at("member") == true);
}

TEST_CASE("identical invocations produce identical bytes") {
  std::string cmd = "rayclass --field \"x\" --modulus \"5\"";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out).at("order") == "4");
}

TEST_CASE("output flag writes the payload to a file") {
  std::string path = "cli_test_payload.json";
  RunResult r = run("--output " + path +
                    " endo zeta --field \"x^2+1\" --bound 8 --euler-check");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  Json j = Json::parse(in);
  CHECK(j.at("coefficients") ==
        Json::array({"1", "1", "0", "1", "2", "0", "0", "1"}));
  std::remove(path.c_str());
}

TEST_CASE("verification runner reports per-criterion results") {
  RunResult r = run("--seed 7 verify --suite all");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("passed") == true);
  REQUIRE(j.at("criteria").size() == 10);
  for (const auto& c : j.at("criteria")) CHECK(c.at("passed") == true);
  CHECK(run("verify --suite bogus").exit_code == 3);
}
