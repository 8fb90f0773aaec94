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

#pragma once

// Greedy split induction for optimal quantizers of the measure in measure.hpp.
//
// A quantizer is a frontier of the binary split tree rooted at Closed(empty):
//   Closed(w) -> Closed(w.1), Tail(w.1)
//   Tail(w)   -> Closed(succ(w)), Tail(succ(w))
// An optimal set of (n+1)-means is obtained from an optimal set of n-means by
// splitting any node of maximal error. All keys are exact rationals, so ties
// are detected exactly and every tied choice is enumerated.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ifsquant/measure.hpp"
#include "ifsquant/rational.hpp"

namespace ifsq {

// A quantizer element: the centroid of its region, with cached exact values.
struct Node {
  Region region;
  Rational error;
  Rational centroid;
  Rational left;
  Rational right;
  Rational mass;

  static Node of(const Region& r);
};

// Human-readable node name: a(2.1) or a(2.1,inf).
std::string node_name(const Region& r);

std::pair<Node, Node> children(const Node& node);

// Canonical identity of a quantizer: node regions in left-endpoint order.
using SetKey = std::vector<Region>;

struct QuantizerSet {
  std::vector<Node> nodes;  // sorted by left endpoint
  Rational v;               // sum of node errors

  [[nodiscard]] std::size_t n() const { return nodes.size(); }
  [[nodiscard]] SetKey key() const;
  [[nodiscard]] std::vector<Rational> points() const;
};

// Builds a set from arbitrary regions: sorts by left endpoint and sums errors.
QuantizerSet make_set(const std::vector<Region>& regions);

// Splits `index` in a sorted set, keeping the order.
QuantizerSet split_at(const QuantizerSet& set, std::size_t index);

// Max-error frontier. Ties on error pop the smallest left endpoint first.
class GenerationState {
 public:
  GenerationState();

  // Splits a node of maximal error and returns it.
  Node split();

  [[nodiscard]] std::size_t n() const { return heap_.size(); }
  [[nodiscard]] std::size_t steps() const { return steps_; }
  [[nodiscard]] const Rational& v() const { return v_; }
  [[nodiscard]] const Rational& max_error() const { return heap_.front().error; }
  [[nodiscard]] const std::vector<Node>& nodes() const { return heap_; }

  [[nodiscard]] QuantizerSet snapshot() const;

 private:
  void push(Node node);

  std::vector<Node> heap_;
  Rational v_;
  std::size_t steps_ = 0;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t layer, std::size_t cap);
  [[nodiscard]] std::size_t layer() const { return layer_; }

 private:
  std::size_t layer_;
};

inline constexpr std::size_t kDefaultEnumerateCap = 10000;
inline constexpr std::size_t kDefaultGraphCap = 1000;

// One canonical member of C_n. Throws std::invalid_argument for n < 1.
QuantizerSet optimal_set(std::size_t n);
Rational quantization_error(std::size_t n);

// C_1 .. C_n, each in canonical order. Throws CapExceeded naming the first
// layer whose size would exceed `cap`.
std::vector<std::vector<QuantizerSet>> enumerate_layers(std::size_t n, std::size_t cap = kDefaultEnumerateCap);
std::vector<QuantizerSet> enumerate_optimal_sets(std::size_t n, std::size_t cap = kDefaultEnumerateCap);

// Nodes of maximal error in `set` (the candidates for the next split).
std::vector<std::size_t> max_error_indices(const QuantizerSet& set);

// |C_n| from the greedy run alone: with t the error of the last split, q the
// splits of error > t, and m the nodes of error t after those q splits,
// |C_n| = binomial(m, n - 1 - q).
BigInt count_optimal_sets(std::size_t n);

struct TransitionGraph {
  struct Edge {
    std::size_t from;  // vertex index in layer k
    std::size_t to;    // vertex index in layer k + 1
  };
  struct Layer {
    std::size_t n = 0;
    std::vector<QuantizerSet> sets;
    std::vector<Edge> edges_out;  // to the next layer
  };
  std::vector<Layer> layers;

  [[nodiscard]] std::size_t vertex_count() const;
  // "a_{k,i}" with 1-based i.
  [[nodiscard]] static std::string label(std::size_t n, std::size_t index);
};

// Layers C_lo .. C_hi with an edge a -> b whenever b is one split away from a.
// Throws CapExceeded when a layer exceeds `cap` or the total vertex count does.
TransitionGraph transition_graph(std::size_t n_lo, std::size_t n_hi, std::size_t cap = kDefaultGraphCap);

struct ValidationReport {
  bool ok = true;
  std::string failure;  // first violated predicate
  explicit operator bool() const { return ok; }
};

// Exact structural checks: centroids inside their regions and strictly
// increasing, each Voronoi midpoint inside the gap between adjacent regions,
// masses summing to 1, total expectation 4/7, and v equal to the error sum.
ValidationReport validate_structure(const QuantizerSet& q);

struct BranchDecomposition {
  Letter k = 0;                     // the single top-level tail is Tail([k])
  std::vector<std::size_t> counts;  // counts[j-1] = nodes inside J_j
};

// Splits an optimal set by first letter and checks that
//   n = sum counts + 1 and
//   V_n = sum_j p_j s_j^2 V_{n_j} + tail error of Tail([k]).
// Throws std::logic_error when the set does not have that shape.
BranchDecomposition branch_decomposition(const QuantizerSet& q);

}  // namespace ifsq
