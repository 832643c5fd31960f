#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quatlat/cli.hpp"
#include "quatlat/io.hpp"
#include "support.hpp"

using namespace quatlat;
using namespace quatlat::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "quatlat");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(QUATLAT_CONFIG_DIR) + "/" + name; }

std::string temp_config(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("quatlat_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("6/4") == ratio(3, 2));
  CHECK(parse_rational("-1/2") == ratio(-1, 2));
  CHECK(parse_rational("+5") == 5);
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1/-2", "1.5", "--1"})
    CHECK_THROWS_AS(parse_rational(bad), ConfigError);
}

TEST_CASE("lattice serialization round trip") {
  Rng rng(21);
  for (const AlgebraRef& alg : {Algebra::quaternion(-1, -3), Algebra::matrix(2)}) {
    for (int c = 0; c < 30; ++c) {
      RatMatrix b = to_rational(random_nonsingular(rng, 4, 3));
      for (auto& x : b.row(0)) x /= uniform(rng, 1, 4);
      Lattice l(alg, b);
      json j = json::parse(lattice_to_json(l).dump());
      CHECK(lattice_from_json(alg, j) == l);
    }
  }
  CHECK_THROWS_AS(lattice_from_json(Algebra::matrix(2), json{{"den", "1"}}), ConfigError);
}

TEST_CASE("weak-classes command") {
  Run r = run({"weak-classes", "--input", config("order_2i2j2k.json")});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["count"] == 2);
  CHECK(j["representatives"].size() == 2);

  Run m = run({"weak-classes", "--input", config("hurwitz.json")});
  CHECK(m.code == 0);
  CHECK(json::parse(m.out)["count"] == 1);

  std::string no_unit = temp_config("no_unit", R"({"algebra": {"kind": "quaternion", "a": "-1", "b": "-1"},
    "order": {"basis": [["2","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}})");
  Run bad = run({"weak-classes", "--input", no_unit});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not an order: missing unit") != std::string::npos);
}

TEST_CASE("classes command") {
  Run r = run({"classes", "--input", config("order_2i2j2k.json")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["count"] == 8);
  int invertible = 0;
  for (const json& c : j["classes"]) invertible += c["invertible"].get<bool>();
  CHECK(invertible == 4);
  CHECK(json::parse(run({"classes", "--input", config("hurwitz.json")}).out)["count"] == 1);

  std::string indefinite = temp_config("indefinite", R"({"algebra": {"kind": "quaternion", "a": "1", "b": "-1"},
    "order": {"basis": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}})");
  Run ind = run({"classes", "--input", indefinite});
  CHECK(ind.code == 3);

  std::string missing = temp_config("missing", R"({"algebra": {"kind": "quaternion", "a": "-1"}})");
  CHECK(run({"classes", "--input", missing}).code == 2);
  CHECK(run({"classes"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classes", "--input", "/nonexistent/config.json"}).code == 2);
  CHECK(run({"weak-classes", "--input", config("order_2i2j2k.json"), "--budget", "5"}).code == 4);
}

TEST_CASE("brandt and theta commands") {
  Run r = run({"brandt", "--input", config("order_2i2j2k.json"), "--n", "1..14"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 14);
  CHECK(j[0]["n"] == 1);
  CHECK(j[1]["matrix"][0][4] == "2");

  Run text = run({"brandt", "--input", config("order_2i2j2k.json"), "--n", "2", "--format", "text"});
  CHECK(text.out.rfind("T(2) =\n", 0) == 0);

  Run th = run({"theta", "--input", config("order_2i2j2k.json"), "--i", "1", "--j", "1", "--prec", "15",
                "--format", "text"});
  REQUIRE(th.code == 0);
  CHECK(th.out ==
        "Theta_{1,1}(q) = 1/2 + q + 0q^2 + 0q^3 + 2q^4 + 2q^5 + 0q^6 + 0q^7 + 2q^8 + q^9 + 0q^10 + 0q^11 + "
        "2q^12 + 6q^13 + 0q^14 + 0q^15\n");
  Run t0 = run({"theta", "--input", config("order_2i2j2k.json"), "--i", "1", "--j", "1", "--prec", "0"});
  json c0 = json::parse(t0.out);
  REQUIRE(c0[0]["coefficients"].size() == 1);
  CHECK(c0[0]["coefficients"][0] == "1/2");
  CHECK(run({"theta", "--input", config("order_2i2j2k.json"), "--i", "9", "--j", "1"}).code == 2);
  CHECK(run({"brandt", "--input", config("order_2i2j2k.json"), "--n", "x..y"}).code == 2);
}

TEST_CASE("fixtures command") {
  Run r = run({"fixtures"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  Run j = run({"fixtures", "--format", "json"});
  json list = json::parse(j.out);
  CHECK(list.size() == 4);
  for (const json& f : list) CHECK(f["passed"] == true);
}
