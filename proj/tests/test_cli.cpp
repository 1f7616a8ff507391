/*
 * Copyright 2026 The nilcascade Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcascade/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <filesystem>
#include <set>
#include <sstream>

using nilcascade::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream f(path);
  return nlohmann::json::parse(f);
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("cascade lists betas by generation") {
  const auto r = call({"cascade", "--type", "E7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E7: 7 betas in 4 generations") == 0);
  CHECK(r.out.find("generation 3\n  beta_3 = psi7\n") != std::string::npos);
  const auto b = call({"cascade", "--type", "B", "--rank", "4"});
  CHECK(b.code == 0);
  CHECK(b.out.find("B4: 4 betas") == 0);

  const std::string path = temp_path("nilcascade_cascade.json");
  CHECK(call({"cascade", "--type", "G2", "--json", path}).code == 0);
  const auto j = read_json(path);
  CHECK(j["betas"] == nlohmann::json({"3psi1+2psi2", "psi1"}));
  std::remove(path.c_str());
}

TEST_CASE("verify appendix writes per-layer comparisons") {
  const std::string path = temp_path("nilcascade_f4.json");
  const auto r = call({"verify", "appendix", "--type", "F4", "--json", path});
  CHECK(r.code == 0);
  const auto j = read_json(path);
  CHECK(j["passed"] == true);
  std::set<std::string> names;
  for (const auto& rep : j["suites"][0]["reports"])
    for (const auto& c : rep["checks"]) names.insert(c["name"]);
  for (const char* n : {"layer 1 pairs", "layer 2 pairs", "layer 3 pairs", "layer 4 pairs",
                        "generation 1"})
    CHECK(names.count(n) == 1);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2 with usage on the diagnostic stream") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "appendix", "--type", "Z9"},
           {},
           {"frobnicate"},
           {"cascade"},
           {"cascade", "--type", "E"},
           {"cascade", "--type", "E7", "--rank", "6"},
           {"verify", "sometimes"},
           {"verify", "all", "--only", "nothing"},
           {"verify", "jacobi", "--only", "setup"},
           {"algebra", "--upper", "3", "--split", "G2"},
           {"algebra"},
           {"algebra", "--restricted", "slnh", "x"},
           {"pfaffian", "--restricted", "so", "3"},
           {"verify", "appendix", "--type", "BC2"},
           {"cascade", "--type", "E7", "--colour"}}) {
    CAPTURE(args.size());
    const auto r = call(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage:") != std::string::npos);
  }
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("verify all skips numerics by default and is deterministic") {
  const auto a = call({"verify", "all"});
  CHECK(a.code == 0);
  CHECK(a.out.find("numeric   SKIP") != std::string::npos);
  for (const char* s : {"rootsys", "cascade", "appendix", "jacobi", "setup", "pfaffian"})
    CHECK(a.out.find(std::string(s)) != std::string::npos);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CHECK(call({"verify", "all"}).out == a.out);

  const auto one = call({"verify", "all", "--type", "G2", "--only", "cascade"});
  CHECK(one.code == 0);
  CHECK(one.out == "suite     status  checks\ncascade   PASS    7/7\n");
}

TEST_CASE("algebra, pfaffian and multiplicity reports") {
  const auto a = call({"algebra", "--upper", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.find("[e1_2, e2_3] = (1) e1_3") != std::string::npos);

  const std::string path = temp_path("nilcascade_alg.json");
  CHECK(call({"algebra", "--split", "G2", "--json", path}).code == 0);
  CHECK(read_json(path)["basis"].size() == 6);

  const auto p = call({"pfaffian", "--upper", "5", "--json", path});
  CHECK(p.code == 0);
  CHECK(p.out.find("c = 96") != std::string::npos);
  const auto pj = read_json(path);
  CHECK(pj["constant"] == "96");
  CHECK(pj.contains("plancherel"));

  const auto big = call({"pfaffian", "--restricted", "slnh", "5", "--json", path});
  CHECK(big.code == 0);
  CHECK(big.out.find("symbolic Pf not expanded, dim v = 24") != std::string::npos);
  CHECK_FALSE(read_json(path).contains("plancherel"));
  CHECK(read_json(path)["layers"][0]["witness"]["lambda"] ==
        nlohmann::json({"1/1", "0/1", "0/1", "1/1"}));

  const auto m = call({"multiplicity", "--upper", "3", "--box", "2", "--json", path});
  CHECK(m.code == 0);
  CHECK(m.out.find("(-2): 2\n") != std::string::npos);
  CHECK(read_json(path)["box"] == 2);
  std::remove(path.c_str());
}

TEST_CASE("numeric suite on request") {
  const auto r = call({"verify", "numeric"});
  CHECK(r.code == 0);
  CHECK(r.out.find("numeric   PASS    9/9") != std::string::npos);
}

TEST_CASE("summary JSON reflects a failing suite") {
  using namespace nilcascade::cli;
  SuiteResult bad;
  bad.name = "cascade";
  bad.status = "FAIL";
  nilcascade::VerificationReport rep;
  rep.subject = "E6";
  rep.add("layer 2 pairs", false, "layer 2: missing {psi1, psi3}");
  bad.reports.push_back(rep);
  const auto j = to_json(std::vector<SuiteResult>{bad});
  CHECK(j["passed"] == false);
  CHECK(j["suites"][0]["reports"][0]["checks"][0]["detail"] == "layer 2: missing {psi1, psi3}");
  CHECK_THROWS_AS(verify_all(VerifyOptions{{"nothing"}, false, {}, {}}), std::invalid_argument);
}
