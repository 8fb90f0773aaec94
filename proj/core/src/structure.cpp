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

#include <map>

#include "ifsquant/engine.hpp"

namespace ifsq {

namespace {

ValidationReport fail(std::string what) { return {false, std::move(what)}; }

}  // namespace

ValidationReport validate_structure(const QuantizerSet& q) {
  const auto& c = constants();
  const auto& nodes = q.nodes;
  if (nodes.empty()) return fail("empty quantizer");

  for (const auto& node : nodes) {
    if (node.centroid < node.left || node.centroid > node.right) {
      return fail("centroid outside region for " + node_name(node.region));
    }
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const Node& a = nodes[i - 1];
    const Node& b = nodes[i];
    if (!(a.centroid < b.centroid)) {
      return fail("centroids not strictly increasing at " + node_name(b.region));
    }
    const Rational mid = (a.centroid + b.centroid) / 2;
    if (mid < a.right || mid > b.left) {
      return fail("Voronoi boundary outside gap between " + node_name(a.region) + " and " + node_name(b.region));
    }
  }

  Rational mass, moment, error;
  for (const auto& node : nodes) {
    mass += node.mass;
    moment += node.mass * node.centroid;
    error += node.error;
  }
  if (mass != Rational(1)) return fail("masses sum to " + to_fraction_string(mass) + ", not 1");
  if (moment != c.mean) return fail("total expectation " + to_fraction_string(moment) + " != 4/7");
  if (error != q.v) return fail("v does not equal the sum of node errors");
  return {};
}

BranchDecomposition branch_decomposition(const QuantizerSet& q) {
  const Node* top_tail = nullptr;
  for (const auto& node : q.nodes) {
    if (node.region.is_tail() && node.region.word().size() == 1) {
      if (top_tail) throw std::logic_error("more than one top-level tail node");
      top_tail = &node;
    }
  }
  if (!top_tail) throw std::logic_error("no top-level tail node");

  BranchDecomposition out;
  out.k = top_tail->region.word().last();
  out.counts.assign(static_cast<std::size_t>(out.k), 0);
  for (const auto& node : q.nodes) {
    if (&node == top_tail) continue;
    const Word& w = node.region.word();
    if (w.empty()) throw std::logic_error("root node in a multi-node set");
    if (w[0] > out.k) throw std::logic_error(node_name(node.region) + " lies beyond the top-level tail");
    ++out.counts[static_cast<std::size_t>(w[0] - 1)];
  }

  std::size_t total = 1;
  for (std::size_t j = 0; j < out.counts.size(); ++j) {
    if (out.counts[j] == 0) throw std::logic_error("branch " + std::to_string(j + 1) + " is empty");
    total += out.counts[j];
  }
  if (total != q.n()) throw std::logic_error("branch counts do not add up to n - 1");

  std::map<std::size_t, Rational> sub_errors;
  Rational expected = top_tail->error;
  for (std::size_t j = 0; j < out.counts.size(); ++j) {
    auto [it, fresh] = sub_errors.try_emplace(out.counts[j]);
    if (fresh) it->second = quantization_error(out.counts[j]);
    const Word wj{static_cast<Letter>(j + 1)};
    const Rational s = scale_word(wj);
    expected += prob_word(wj) * s * s * it->second;
  }
  if (expected != q.v) throw std::logic_error("branch-wise error sum does not match V_n");
  return out;
}

}  // namespace ifsq
