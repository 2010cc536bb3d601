// Copyright 2026 The tricdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "cli/commands.hpp"
#include "cli/serialize.hpp"

using namespace tricdc;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using cli::json;
using std::numbers::pi;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tricdc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tricdc_test_" + name);
}

const char* kHeader =
    "param,tau,c2_a_bc,c2_ab,c2_ac,rank_a,rank_b,rank_c,class,avg_capacity,min_capacity,perfect";

const char* kStuckRanks =
    R"({"amplitudes":[[0.9999999986,0],0,0,0,0,[2.6457513e-5,0],[2.6457513e-5,0],0]})";

}  // namespace

TEST_CASE("classify", "[cli]") {
  auto ghz = invoke({"classify", "--family", "ghz"});
  REQUIRE(ghz.code == cli::kExitOk);
  CHECK_THAT(ghz.out, ContainsSubstring("class: GhzClass"));

  auto w = invoke({"classify", "--family", "w", "--format", "json"});
  REQUIRE(w.code == cli::kExitOk);
  const auto doc = json::parse(w.out);
  CHECK(doc.at("class") == "WClass");
  CHECK_THAT(doc.at("tau").get<double>(), WithinAbs(0, 1e-12));

  SECTION("emitted profiles re-parse under the same schema") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--family", "ghz"},
             {"--family", "ms", "--param", "alpha=pi/3"},
             {"--family", "symmetric", "--param", "p=0.5", "--param", "q=0.5", "--param", "r=0.5",
              "--param", "s=0.5"},
             {"--family", "type2", "--param", "n=2", "--param", "alpha=0.3", "--param", "epsilon=1"},
             {"--state", R"({"family":"chi_minus","params":{"k":"z","epsilon":"pi/5"}})"}}) {
      std::vector<std::string> full{"classify", "--format", "json"};
      full.insert(full.end(), args.begin(), args.end());
      const auto r = invoke(full);
      REQUIRE(r.code == cli::kExitOk);
      const auto parsed = json::parse(r.out);
      const auto profile = cli::profile_from_json(parsed);
      CHECK(cli::to_json(profile) == [&] {
        auto copy = parsed;
        copy.erase("renormalized");
        return copy;
      }());
    }
  }
  SECTION("the schema check rejects tampered documents") {
    auto doc2 = json::parse(invoke({"classify", "--family", "ghz", "--format", "json"}).out);
    doc2["tau"] = 0.5;
    CHECK_THROWS_AS(cli::profile_from_json(doc2), ParseError);
    doc2.erase("tau");
    CHECK_THROWS_AS(cli::profile_from_json(doc2), ParseError);
  }
}

TEST_CASE("state input routes", "[cli]") {
  const auto shown = invoke({"states", "show", "--family", "ms", "--param", "alpha=pi/3"});
  REQUIRE(shown.code == cli::kExitOk);
  const auto path = scratch("ms.json");
  std::ofstream(path) << shown.out;

  const auto from_file = invoke({"classify", "--spec", path.string(), "--format", "json"});
  const auto from_family = invoke({"classify", "--family", "ms", "--param", "alpha=pi/3", "--format", "json"});
  REQUIRE(from_file.code == cli::kExitOk);
  CHECK_THAT(json::parse(from_file.out).at("tau").get<double>(), WithinAbs(0.75, 1e-12));
  CHECK(json::parse(from_file.out).at("class") == json::parse(from_family.out).at("class"));
  std::filesystem::remove(path);

  const auto listed = invoke({"states", "list"});
  REQUIRE(listed.code == cli::kExitOk);
  for (const char* name : {"chi_plus", "chi_minus", "xi_plus", "xi_minus", "ghz", "w", "ghz_class",
                           "w_class", "ms", "symmetric", "type1", "type2"}) {
    CHECK_THAT(listed.out, ContainsSubstring(name));
  }
}

TEST_CASE("cdc", "[cli]") {
  SECTION("chi with the matching correction") {
    const auto r = invoke({"cdc", "--family", "chi_plus", "--param", "k=x", "--param", "epsilon=0.5236",
                           "--controller", "a", "--theta", "0", "--rule", "1:x"});
    REQUIRE(r.code == cli::kExitOk);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("perfect_cdc") == true);
    CHECK_THAT(doc.at("average_capacity_bits").get<double>(), WithinAbs(2, 1e-9));
  }
  SECTION("W") {
    const auto doc = json::parse(invoke({"cdc", "--family", "w", "--controller", "a"}).out);
    CHECK_THAT(doc.at("average_capacity_bits").get<double>(), WithinAbs(5.0 / 3, 1e-6));
    CHECK(doc.at("perfect_cdc") == false);
  }
  SECTION("basis optimization") {
    const auto r = invoke({"cdc", "--family", "ms", "--param", "alpha=pi/3", "--optimize-basis"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK_THAT(r.out, ContainsSubstring("min_branch_concurrence"));
    const auto doc = json::parse(r.out);
    double found = -1;
    // the concurrence sits under whichever key the search result is nested in
    for (const auto& [key, value] : doc.items()) {
      if (value.is_object() && value.contains("min_branch_concurrence")) {
        found = value.at("min_branch_concurrence").get<double>();
      }
    }
    CHECK_THAT(found, WithinAbs(std::sin(pi / 3), 1e-3));
  }
  SECTION("seeded families pick their correction automatically") {
    const auto doc = json::parse(
        invoke({"cdc", "--family", "xi_minus", "--param", "k=y", "--param", "epsilon=pi/7"}).out);
    CHECK(doc.at("perfect_cdc") == true);
    for (const auto& b : doc.at("branches")) CHECK(b.at("best_bell") == "psi-");
  }
}

TEST_CASE("sweep", "[cli]") {
  SECTION("maximal slice") {
    const auto r = invoke({"sweep", "--family", "ms", "--vary", "alpha", "--from", "0", "--to", "pi",
                           "--steps", "33"});
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 34);
    CHECK(r.out.substr(0, r.out.find('\n')) == kHeader);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      REQUIRE(rows[i].size() == 12);
      const double alpha = std::stod(rows[i][0]);
      REQUIRE_THAT(alpha, WithinAbs(pi * (i - 1) / 32, 1e-11));
      REQUIRE_THAT(std::stod(rows[i][1]), WithinAbs(std::pow(std::sin(alpha), 2), 1e-9));
    }
  }
  SECTION("chi with k = y") {
    const auto rows = csv_rows(invoke({"sweep", "--family", "chi_plus", "--param", "k=y", "--vary", "epsilon",
                                       "--from", "0", "--to", "pi/2", "--steps", "26"})
                                   .out);
    REQUIRE(rows.size() == 27);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double eps = std::stod(rows[i][0]);
      REQUIRE_THAT(std::stod(rows[i][1]), WithinAbs(std::pow(std::sin(2 * eps), 2), 1e-9));
      REQUIRE(rows[i][11] == "true");
    }
  }
  SECTION("type I into a file, as JSON too") {
    const auto path = scratch("type1.csv");
    const auto r = invoke({"sweep", "--family", "type1", "--vary", "l", "--from", "0.1", "--to", "4",
                           "--steps", "40", "-o", path.string()});
    REQUIRE(r.code == cli::kExitOk);
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto rows = csv_rows(text);
    REQUIRE(rows.size() == 41);
    CHECK(rows.back()[0] == "4");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double l = std::stod(rows[i][0]);
      REQUIRE_THAT(std::stod(rows[i][1]), WithinAbs(4 * l * l / std::pow(1 + l * l, 2), 1e-9));
    }
    std::filesystem::remove(path);

    const auto j = invoke({"sweep", "--family", "type1", "--vary", "l", "--from", "0.1", "--to", "4",
                           "--steps", "40", "--format", "json"});
    const auto doc = json::parse(j.out);
    REQUIRE(doc.size() == 40);
    CHECK_THAT(doc[0].at("param").get<double>(), WithinAbs(0.1, 1e-15));
  }
  SECTION("repeats are byte-identical") {
    const std::vector<std::string> args{"sweep", "--family", "ghz_class", "--vary", "delta", "--from",
                                        "0.1", "--to", "pi/4", "--steps", "20", "--param", "alpha=0.4",
                                        "--param", "beta=0.7", "--param", "gamma=1", "--param", "phi=0.3",
                                        "--optimize-basis", "--grid", "8"};
    const auto first = invoke(args);
    REQUIRE(first.code == cli::kExitOk);
    CHECK(first.out == invoke(args).out);
  }
}

TEST_CASE("tangle", "[cli]") {
  const auto r = invoke({"tangle", "--family", "type1", "--param", "l=2"});
  REQUIRE(r.code == cli::kExitOk);
  const auto random = invoke({"tangle", "--random", "200", "--seed", "3", "--format", "json"});
  REQUIRE(random.code == cli::kExitOk);
  const auto doc = json::parse(random.out);
  CHECK(doc.at("max_route_gap").get<double>() < 1e-8);
  CHECK(random.out == invoke({"tangle", "--random", "200", "--seed", "3", "--format", "json"}).out);
  CHECK(invoke({"tangle", "--random", "200"}).code == cli::kExitInput);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(invoke({"--help"}).code == cli::kExitOk);
  CHECK(invoke({"classify", "--family", "w"}).code == cli::kExitOk);

  const std::vector<std::vector<std::string>> input_errors{
      {},
      {"bogus"},
      {"classify"},
      {"classify", "--state", "{not json"},
      {"classify", "--state", R"({"family":"nope"})"},
      {"classify", "--family", "nope"},
      {"classify", "--family", "ghz", "--format", "yaml"},
      {"classify", "--family", "ms", "--param", "alpha=4"},
      {"classify", "--family", "ms", "--param", "beta=1"},
      {"classify", "--family", "ms", "--param", "alpha"},
      {"classify", "--state", R"({"amplitudes":[0,0,0,0,0,0,0,0]})"},
      {"classify", "--state", R"({"amplitudes":[1,0,0]})"},
      {"classify", "--spec", "/nonexistent/spec.json"},
      {"cdc", "--family", "ms", "--optimize-basis", "--theta", "0.3"},
      {"cdc", "--family", "ghz", "--grid", "16"},
      {"cdc", "--family", "ghz", "--controller", "d"},
      {"cdc", "--family", "ghz", "--rule", "1:q"},
      {"cdc", "--family", "ghz", "--theta", "3"},
      {"cdc", "--family", "ghz", "--optimize-basis", "--grid", "4"},
      {"sweep", "--family", "ms", "--vary", "alpha", "--from", "0", "--to", "1", "--steps", "1"},
      {"sweep", "--family", "ms", "--vary", "alpha", "--from", "1", "--to", "0", "--steps", "4"},
      {"sweep", "--family", "ms", "--vary", "gamma", "--from", "0", "--to", "1", "--steps", "4"},
      {"sweep", "--family", "ms", "--vary", "alpha", "--from", "0", "--to", "1", "--steps", "4", "-o",
       "/nonexistent/dir/out.csv"},
      {"states", "show", "--family", "nope"},
  };
  for (const auto& args : input_errors) {
    CAPTURE(args);
    const auto r = invoke(args);
    CHECK(r.code == cli::kExitInput);
    CHECK_FALSE(r.err.empty());
  }

  const auto stuck = invoke({"classify", "--state", kStuckRanks});
  CHECK(stuck.code == cli::kExitNumeric);
  CHECK_THAT(stuck.err, ContainsSubstring("rank"));
}
