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

#include "ifsquant/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ifsq::io {

namespace {

using nlohmann::json;

const char* kind_name(const Region& r) { return r.is_tail() ? "tail" : "closed"; }

json node_json(const Node& node) {
  return json{{"word", render(node.region.word())},
              {"kind", kind_name(node.region)},
              {"centroid", to_fraction_string(node.centroid)},
              {"centroid_float", node.centroid.to_double()},
              {"error", to_fraction_string(node.error)}};
}

json set_json(const QuantizerSet& set) {
  json nodes = json::array();
  for (const auto& node : set.nodes) nodes.push_back(node_json(node));
  return json{{"n", set.n()},
              {"V", to_fraction_string(set.v)},
              {"V_float", set.v.to_double()},
              {"nodes", std::move(nodes)}};
}

}  // namespace

std::string to_json(const QuantizerSet& set, int indent) { return set_json(set).dump(indent); }

QuantizerSet quantizer_set_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("invalid quantizer JSON: ") + e.what());
  }
  std::vector<Region> regions;
  for (const auto& item : doc.at("nodes")) {
    Word w = parse_word(item.at("word").get<std::string>());
    const auto kind = item.at("kind").get<std::string>();
    if (kind == "closed") regions.push_back(Region::closed(std::move(w)));
    else if (kind == "tail") regions.push_back(Region::tail(std::move(w)));
    else throw std::runtime_error("unknown node kind \"" + kind + "\"");
  }
  QuantizerSet set = make_set(regions);

  if (doc.contains("n") && doc.at("n").get<std::size_t>() != set.n()) {
    throw std::runtime_error("node count does not match \"n\"");
  }
  if (doc.contains("V") && Rational::parse(doc.at("V").get<std::string>()) != set.v) {
    throw std::runtime_error("stored V does not match the nodes");
  }
  for (const auto& item : doc.at("nodes")) {
    const Region r = item.at("kind") == "tail" ? Region::tail(parse_word(item.at("word").get<std::string>()))
                                               : Region::closed(parse_word(item.at("word").get<std::string>()));
    if (item.contains("centroid") && Rational::parse(item.at("centroid").get<std::string>()) != centroid(r)) {
      throw std::runtime_error("stored centroid of " + node_name(r) + " is wrong");
    }
    if (item.contains("error") && Rational::parse(item.at("error").get<std::string>()) != node_error(r)) {
      throw std::runtime_error("stored error of " + node_name(r) + " is wrong");
    }
  }
  return set;
}

std::string to_dot(const TransitionGraph& graph) {
  std::ostringstream out;
  out << "digraph optimal_sets {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (const auto& layer : graph.layers) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < layer.sets.size(); ++i) {
      out << " \"" << TransitionGraph::label(layer.n, i) << "\"";
    }
    out << " }\n";
  }
  for (const auto& layer : graph.layers) {
    for (std::size_t i = 0; i < layer.sets.size(); ++i) {
      out << "  \"" << TransitionGraph::label(layer.n, i) << "\" [tooltip=\"V = "
          << to_fraction_string(layer.sets[i].v) << "\"];\n";
    }
  }
  for (const auto& layer : graph.layers) {
    for (const auto& e : layer.edges_out) {
      out << "  \"" << TransitionGraph::label(layer.n, e.from) << "\" -> \""
          << TransitionGraph::label(layer.n + 1, e.to) << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const TransitionGraph& graph, int indent) {
  json layers = json::array();
  json edges = json::array();
  for (const auto& layer : graph.layers) {
    json vertices = json::array();
    for (std::size_t i = 0; i < layer.sets.size(); ++i) {
      json names = json::array();
      for (const auto& node : layer.sets[i].nodes) names.push_back(node_name(node.region));
      vertices.push_back(json{{"label", TransitionGraph::label(layer.n, i)},
                              {"V", to_fraction_string(layer.sets[i].v)},
                              {"nodes", std::move(names)}});
    }
    layers.push_back(json{{"n", layer.n}, {"vertices", std::move(vertices)}});
    for (const auto& e : layer.edges_out) {
      edges.push_back(json{{"from", TransitionGraph::label(layer.n, e.from)},
                           {"to", TransitionGraph::label(layer.n + 1, e.to)}});
    }
  }
  return json{{"layers", std::move(layers)}, {"edges", std::move(edges)}}.dump(indent);
}

}  // namespace ifsq::io
