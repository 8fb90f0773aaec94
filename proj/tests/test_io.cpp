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


#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace ifsq;
using nlohmann::json;

TEST_CASE("quantizer set json round trip") {
  for (std::size_t n : {1u, 2u, 5u, 16u, 60u}) {
    const QuantizerSet q = optimal_set(n);
    const std::string text = io::to_json(q);
    const QuantizerSet back = io::quantizer_set_from_json(text);
    CHECK(back.key() == q.key());
    CHECK(back.v == q.v);
    CHECK(io::to_json(back) == text);
  }
}

TEST_CASE("quantizer set json layout") {
  const json doc = json::parse(io::to_json(optimal_set(2)));
  CHECK(doc["n"] == 2);
  CHECK(doc["V"] == "69/3577");
  CHECK(doc["nodes"].size() == 2);
  CHECK(doc["nodes"][0]["word"] == "1");
  CHECK(doc["nodes"][0]["kind"] == "closed");
  CHECK(doc["nodes"][0]["centroid"] == "1/7");
  CHECK(doc["nodes"][1]["kind"] == "tail");
  CHECK(doc["nodes"][1]["error"] == "129/7154");
  CHECK(json::parse(io::to_json(optimal_set(1)))["nodes"][0]["word"] == "");
}

TEST_CASE("tampered json is rejected") {
  json doc = json::parse(io::to_json(optimal_set(3)));
  doc["nodes"][1]["centroid"] = "1/2";
  CHECK_THROWS_AS(io::quantizer_set_from_json(doc.dump()), std::runtime_error);
  doc = json::parse(io::to_json(optimal_set(3)));
  doc["V"] = "1/3";
  CHECK_THROWS_AS(io::quantizer_set_from_json(doc.dump()), std::runtime_error);
  doc = json::parse(io::to_json(optimal_set(3)));
  doc["nodes"][0]["kind"] = "open";
  CHECK_THROWS(io::quantizer_set_from_json(doc.dump()));
  CHECK_THROWS(io::quantizer_set_from_json("not json"));
}

TEST_CASE("transition graph dot") {
  const std::string dot = io::to_dot(transition_graph(18, 21, 100));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("\"a_{18,1}\" -> \"a_{19,1}\"") != std::string::npos);
  CHECK(dot.find("\"a_{20,3}\" -> \"a_{21,1}\"") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++edges;
  CHECK(edges == 12);
}

TEST_CASE("transition graph json") {
  const json doc = json::parse(io::to_json(transition_graph(18, 21, 100)));
  REQUIRE(doc["layers"].size() == 4);
  CHECK(doc["layers"][1]["n"] == 19);
  CHECK(doc["layers"][1]["vertices"].size() == 3);
  CHECK(doc["layers"][1]["vertices"][0]["label"] == "a_{19,1}");
  CHECK(doc["edges"].size() == 12);
}
