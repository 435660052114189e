// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "liminal/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = liminal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const auto dir = fs::temp_directory_path() / "liminal-cli-tests";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run({"classify", "--system", "1,1,1,1;4"}).code == 0);
    CHECK(run({"classify", "--system", "2,5;6"}).code == 1);
    CHECK(run({"classify", "--system", "1,3;4"}).code == 1);
    CHECK(run({"classify", "--system", "not a system"}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"suite", "--n", "2..4"}).code == 2);
    CHECK(run({"enumerate", "--dim", "0"}).code == 2);
    CHECK(run({"t1", "--system", "1,1,1;3", "--monomial", "1,1"}).code == 2);
  }

  TEST_CASE("domain errors name their kind") {
    const auto r = run({"spectrum", "--system", "2,5;6"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NonPolynomialQuotient") != std::string::npos);
    CHECK(run({"classify", "--weights", "1,3", "--degree", "4"}).err.find("NormalizationViolation") !=
          std::string::npos);
  }

  TEST_CASE("classify") {
    const auto r = run({"classify", "--system", "1,1,1,1;4", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["liminal_defect"] == 0);
    CHECK(j["class"]["label"] == "0-liminal");
    CHECK(j["class"]["liminal_level"] == 0);
    CHECK(j["minimal_exponent"]["num"] == 1);
    CHECK(j["minimal_exponent"]["den"] == 1);

    const auto odp = json::parse(run({"classify", "--name", "odp-n4", "--json"}).out);
    CHECK(odp["class"]["max_du_bois"] == 1);
    CHECK(odp["class"]["max_rational"] == 1);
    CHECK(odp["class"]["liminal_level"].is_null());
  }

  TEST_CASE("spectrum and t1") {
    const auto sp = json::parse(run({"spectrum", "--system", "1,1,1;3", "--json", "-"}).out);
    CHECK(sp["poincare"] == json::array({1, 3, 3, 1}));
    CHECK(sp["milnor_number"] == 8);
    CHECK(sp["s"] == json::array({0, 7, 1}));

    const auto t1 = json::parse(run({"t1", "--system", "1,1,1,1;4", "--monomial", "1,0,0,0", "--json"}).out);
    CHECK(t1["Kprime"] == 31);
    CHECK(t1["Gr"] == 19);
    CHECK(t1["K"] == 50);
    CHECK(t1["valid"] == true);
    CHECK(t1["monomial_weight"] == -3);
  }

  TEST_CASE("enumerate") {
    const auto r = run({"enumerate", "--dim", "3"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 14);
    CHECK(r.out.find("(2,3,7,42)") != std::string::npos);
    CHECK(r.out.find("(4,4,4,4)") != std::string::npos);

    const auto j = json::parse(run({"enumerate", "--dim", "2", "--json", "--reports"}).out);
    CHECK(j["count"] == 3);
    CHECK(j["reports"].size() == 3);
    CHECK(run({"enumerate", "--dim", "3", "--node-budget", "5"}).code == 1);
  }

  TEST_CASE("node budget from the environment") {
    ::setenv("LIMINAL_NODE_BUDGET", "5", 1);
    const auto limited = run({"enumerate", "--dim", "3"});
    ::setenv("LIMINAL_NODE_BUDGET", "not-a-number", 1);
    const auto bad = run({"enumerate", "--dim", "2"});
    ::unsetenv("LIMINAL_NODE_BUDGET");
    CHECK(limited.code == 1);
    CHECK(limited.err.find("DimensionTooLarge") != std::string::npos);
    CHECK(bad.code == 2);
    CHECK(run({"enumerate", "--dim", "3"}).code == 0);
  }

  TEST_CASE("suite") {
    const auto r = run({"suite", "--n", "3..5", "--json", "-"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["global_t1"] == 101);
    CHECK(j[0]["pair_moduli"] == 70);
    CHECK(j[0]["special_case"] == true);
    CHECK(j[1]["local_codim"] == 667);
    const auto text = run({"suite", "--n", "3"});
    CHECK(text.out.find("101") != std::string::npos);
    CHECK(run({"suite", "--n", "3..80", "--n-cap", "64"}).code == 2);
  }

  TEST_CASE("dual-complex") {
    const auto path = write_temp("two-cy.json", R"({"n": 3, "components": ["E1", "E2"],
      "faces": [[0], [1], [0, 1]],
      "h": [{"face": [0], "q": 2, "dim": 1}, {"face": [1], "q": 2, "dim": 1}]})");
    const auto r = run({"dual-complex", path.string(), "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j["violations"].size() == 1);
    CHECK(j["violations"][0]["clause"] == "a");

    const auto sphere = json::parse(run({"dual-complex", "--name", "dc-tetrahedron-boundary", "--json"}).out);
    CHECK(sphere["cohomology"] == json::array({1, 0, 1}));
    CHECK(run({"dual-complex"}).code == 2);
    CHECK(run({"dual-complex", "/nonexistent/file.json"}).code == 2);
    const auto broken = write_temp("broken.json", R"({"n": 3, "components": ["A"], "faces": [[0], [0, 1]]})");
    CHECK(run({"dual-complex", broken.string()}).code == 1);
  }

  TEST_CASE("registry") {
    const auto r = run({"registry", "list", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find(", 0 failures") != std::string::npos);
    const auto j = json::parse(run({"registry", "list", "--json"}).out);
    CHECK(j["entries"].size() >= 30);
  }

  TEST_CASE("batch") {
    const auto good = write_temp("dim2.json", R"([
      {"weights": [1, 1, 1], "degree": 3},
      {"weights": [1, 1, 2], "degree": 4},
      {"weights": [1, 2, 3], "degree": 6}])");
    const auto r = run({"batch", good.string(), "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["summary"]["reported"] == 3);
    CHECK(j["summary"]["zero_liminal"] == 3);
    for (const auto& rep : j["reports"]) {
      CHECK(rep["liminal_defect"] == 0);
      CHECK(rep["s"][0] == 0);
      CHECK(rep["s"][2] == 1);
    }

    const auto mixed = write_temp("mixed.json", R"([{"weights": [1, 1, 1], "degree": 3},
      {"weights": [2, 5], "degree": 6}])");
    const auto m = run({"batch", mixed.string(), "--json"});
    CHECK(m.code == 1);
    const auto mj = json::parse(m.out);
    CHECK(mj["summary"]["skipped"] == 1);
    CHECK(mj["skipped"][0]["error"] == "NonPolynomialQuotient");

    CHECK(run({"batch", write_temp("empty.json", "[]").string()}).code == 0);
    CHECK(run({"batch", write_temp("object.json", "{}").string()}).code == 2);
    CHECK(run({"batch", write_temp("garbage.json", "[1,").string()}).code == 2);
    CHECK(run({"batch", "/nonexistent/batch.json"}).code == 2);
  }

  TEST_CASE("JSON output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> commands{
        {"enumerate", "--dim", "3", "--reports", "--json"},
        {"suite", "--n", "3..8", "--json"},
        {"spectrum", "--system", "21,14,6,1;42", "--json"},
        {"registry", "list", "--json"}};
    for (const auto& c : commands) {
      const auto first = run(c);
      REQUIRE(first.code == 0);
      CHECK_FALSE(first.out.empty());
      CHECK(run(c).out == first.out);
    }
  }

  TEST_CASE("output files") {
    const auto path = fs::temp_directory_path() / "liminal-cli-tests" / "classify.json";
    fs::create_directories(path.parent_path());
    const auto r = run({"classify", "--system", "1,1,1,1;2", "--json", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = json::parse(in);
    CHECK(j["class"]["liminal_level"] == 1);
    const auto text_path = path.parent_path() / "classify.txt";
    CHECK(run({"classify", "--system", "1,1,1,1;2", "--out", text_path.string()}).code == 0);
    CHECK(fs::file_size(text_path) > 0);
  }
}
