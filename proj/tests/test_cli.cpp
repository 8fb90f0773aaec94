// Copyright 2026 The ifsquant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ifsq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("optimal text output") {
  const auto r = run({"optimal", "--n", "3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1/7\t", 0) == 0);
  CHECK(has(r.out, "\n4/7\t"));
  CHECK(has(r.out, "\n6/7\t"));
  CHECK(has(r.out, "V_3 = 57/14308"));
}

TEST_CASE("optimal json matches text") {
  const auto j = nlohmann::json::parse(run({"optimal", "--n", "16", "--format", "json"}).out);
  const auto t = run({"optimal", "--n", "16"}).out;
  CHECK(j["V"] == "4635/117211136");
  CHECK(has(t, "V_16 = 4635/117211136"));
  for (const auto& node : j["nodes"]) CHECK(has(t, node["centroid"].get<std::string>() + "\t"));
}

TEST_CASE("table csv") {
  const auto r = run({"table", "--from", "2", "--to", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,V,V_float\n", 0) == 0);
  CHECK(has(r.out, "2,\"69/3577\",0.0192899"));
  CHECK(has(r.out, "5,"));
  CHECK(run({"table", "--from", "5", "--to", "2"}).code == 2);
}

TEST_CASE("count and enumerate") {
  CHECK(run({"count", "--n", "16"}).out == "3\n");
  CHECK(run({"count", "--n", "21"}).out == "1\n");
  const auto e = run({"enumerate", "--n", "16", "--format", "json"});
  CHECK(e.code == 0);
  CHECK(nlohmann::json::parse(e.out).size() == 3);
  const auto capped = run({"enumerate", "--n", "24", "--cap", "4"});
  CHECK(capped.code == 1);
  CHECK(has(capped.err, "n = 23"));
}

TEST_CASE("tree export") {
  const auto dot = run({"tree", "--from", "18", "--to", "21", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(has(dot.out, "digraph"));
  CHECK(has(dot.out, "\"a_{18,1}\" -> \"a_{19,3}\""));
  const auto js = run({"tree", "--from", "18", "--to", "21", "--format", "json"});
  CHECK(nlohmann::json::parse(js.out)["edges"].size() == 12);
  CHECK(run({"tree", "--from", "18", "--to", "21", "--cap", "5"}).code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"optimal", "--n", "0"}).code == 2);
  CHECK(run({"optimal", "--bogus"}).code == 2);
  CHECK(run({"optimal", "--n", "3", "--format", "dot"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto r = run({"optimal", "--n", "x"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "usage:"));
  CHECK(r.out.empty());
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "V_2 = 69/3577 PASS"));
  const auto r18 = run({"verify", "--n", "18"});
  CHECK(r18.code == 0);
  CHECK(has(r18.out, "card C_18 = 1 PASS"));
  CHECK_FALSE(has(r18.out, "FAIL"));
}

TEST_CASE("oracle commands are reproducible") {
  const std::vector<std::string> args{"oracle-sample", "--samples", "100000", "--seed", "5", "--format", "json"};
  const auto a = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == run(args).out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "2"});
  CHECK(run(threaded).out == a.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(std::abs(doc["mean"].get<double>() - 4.0 / 7.0) < 5e-3);

  const auto l = run({"oracle-lloyd", "--n", "3", "--samples", "200000", "--format", "json"});
  CHECK(l.code == 0);
  CHECK(nlohmann::json::parse(l.out)["lloyd"]["max_deviation"].get<double>() < 3e-3);

  const auto c = run({"oracle-check", "--n", "4", "--samples", "200000"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "PASS"));
}
