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

#include "ifsquant/engine.hpp"

#include <algorithm>

namespace ifsq {

namespace {

// Heap order: larger error first, then smaller left endpoint.
bool lower_priority(const Node& a, const Node& b) {
  if (auto c = a.error <=> b.error; c != 0) return c < 0;
  if (auto c = a.left <=> b.left; c != 0) return c > 0;
  return a.region > b.region;
}

bool by_left(const Node& a, const Node& b) { return a.left < b.left; }

void require_positive(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

}  // namespace

Node Node::of(const Region& r) {
  const auto& c = constants();
  Node node{r, node_error(r), {}, {}, {}, region_mass(r)};
  if (!r.is_tail()) {
    const AffineMap m = word_map(r.word());
    node.left = m.offset;
    node.right = m.offset + m.scale;
    node.centroid = m(c.mean);
  } else {
    const AffineMap next = word_map(successor(r.word()));
    node.left = next.offset;
    node.right = apply_map(parent(r.word()), Rational(1));
    node.centroid = next(c.mean) + c.tail_offset * next.scale;
  }
  return node;
}

std::string node_name(const Region& r) {
  return "a(" + render(r.word()) + (r.is_tail() ? ",inf)" : ")");
}

std::pair<Node, Node> children(const Node& node) {
  const Word& w = node.region.word();
  if (!node.region.is_tail()) {
    Word down = w.child(1);
    return {Node::of(Region::closed(down)), Node::of(Region::tail(down))};
  }
  Word next = successor(w);
  return {Node::of(Region::closed(next)), Node::of(Region::tail(next))};
}

SetKey QuantizerSet::key() const {
  SetKey k;
  k.reserve(nodes.size());
  for (const auto& node : nodes) k.push_back(node.region);
  return k;
}

std::vector<Rational> QuantizerSet::points() const {
  std::vector<Rational> out;
  out.reserve(nodes.size());
  for (const auto& node : nodes) out.push_back(node.centroid);
  return out;
}

QuantizerSet make_set(const std::vector<Region>& regions) {
  QuantizerSet set;
  set.nodes.reserve(regions.size());
  for (const auto& r : regions) {
    set.nodes.push_back(Node::of(r));
    set.v += set.nodes.back().error;
  }
  std::sort(set.nodes.begin(), set.nodes.end(), by_left);
  return set;
}

QuantizerSet split_at(const QuantizerSet& set, std::size_t index) {
  if (index >= set.nodes.size()) throw std::out_of_range("split index out of range");
  auto [first, second] = children(set.nodes[index]);
  QuantizerSet out;
  out.v = set.v - set.nodes[index].error + first.error + second.error;
  out.nodes.reserve(set.nodes.size() + 1);
  out.nodes.insert(out.nodes.end(), set.nodes.begin(), set.nodes.begin() + static_cast<std::ptrdiff_t>(index));
  out.nodes.push_back(std::move(first));
  out.nodes.push_back(std::move(second));
  out.nodes.insert(out.nodes.end(), set.nodes.begin() + static_cast<std::ptrdiff_t>(index) + 1, set.nodes.end());
  return out;
}

std::vector<std::size_t> max_error_indices(const QuantizerSet& set) {
  std::vector<std::size_t> out;
  if (set.nodes.empty()) return out;
  const Rational* best = &set.nodes.front().error;
  for (std::size_t i = 0; i < set.nodes.size(); ++i) {
    const Rational& e = set.nodes[i].error;
    if (e > *best) {
      best = &e;
      out.clear();
    }
    if (e == *best) out.push_back(i);
  }
  return out;
}

GenerationState::GenerationState() { push(Node::of(Region::closed(Word{}))); }

void GenerationState::push(Node node) {
  v_ += node.error;
  heap_.push_back(std::move(node));
  std::push_heap(heap_.begin(), heap_.end(), lower_priority);
}

Node GenerationState::split() {
  std::pop_heap(heap_.begin(), heap_.end(), lower_priority);
  Node top = std::move(heap_.back());
  heap_.pop_back();
  v_ -= top.error;
  auto [first, second] = children(top);
  push(std::move(first));
  push(std::move(second));
  ++steps_;
  return top;
}

QuantizerSet GenerationState::snapshot() const {
  QuantizerSet set{heap_, v_};
  std::sort(set.nodes.begin(), set.nodes.end(), by_left);
  return set;
}

CapExceeded::CapExceeded(std::size_t layer, std::size_t cap)
    : std::runtime_error("cap of " + std::to_string(cap) + " exceeded at n = " + std::to_string(layer)),
      layer_(layer) {}

QuantizerSet optimal_set(std::size_t n) {
  require_positive(n);
  GenerationState state;
  while (state.n() < n) state.split();
  return state.snapshot();
}

Rational quantization_error(std::size_t n) {
  require_positive(n);
  GenerationState state;
  while (state.n() < n) state.split();
  return state.v();
}

BigInt count_optimal_sets(std::size_t n) {
  require_positive(n);
  if (n == 1) return 1;
  GenerationState state;
  std::vector<Rational> split_errors;
  split_errors.reserve(n - 1);
  while (state.n() < n) split_errors.push_back(state.split().error);

  // Split errors are nonincreasing since children are strictly smaller than
  // their parent, so tied nodes are never ancestor and descendant.
  const Rational& t = split_errors.back();
  const auto q = static_cast<std::size_t>(
      std::count_if(split_errors.begin(), split_errors.end(), [&](const Rational& e) { return e > t; }));
  const std::size_t r = (n - 1) - q;
  const auto remaining = static_cast<std::size_t>(
      std::count_if(state.nodes().begin(), state.nodes().end(), [&](const Node& x) { return x.error == t; }));
  return binomial(static_cast<unsigned long>(r + remaining), static_cast<unsigned long>(r));
}

}  // namespace ifsq
