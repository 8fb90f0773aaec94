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

#include <algorithm>
#include <map>

#include "ifsquant/engine.hpp"

namespace ifsq {

std::vector<std::vector<QuantizerSet>> enumerate_layers(std::size_t n, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  std::vector<std::vector<QuantizerSet>> layers;
  layers.push_back({make_set({Region::closed(Word{})})});
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<SetKey, QuantizerSet> next;
    for (const auto& set : layers.back()) {
      for (std::size_t idx : max_error_indices(set)) {
        QuantizerSet child = split_at(set, idx);
        SetKey key = child.key();
        next.try_emplace(std::move(key), std::move(child));
        if (next.size() > cap) throw CapExceeded(k, cap);
      }
    }
    std::vector<QuantizerSet> layer;
    layer.reserve(next.size());
    for (auto& [key, set] : next) layer.push_back(std::move(set));
    layers.push_back(std::move(layer));
  }
  return layers;
}

std::vector<QuantizerSet> enumerate_optimal_sets(std::size_t n, std::size_t cap) {
  auto layers = enumerate_layers(n, cap);
  return std::move(layers.back());
}

std::size_t TransitionGraph::vertex_count() const {
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.sets.size();
  return total;
}

std::string TransitionGraph::label(std::size_t n, std::size_t index) {
  return "a_{" + std::to_string(n) + "," + std::to_string(index + 1) + "}";
}

TransitionGraph transition_graph(std::size_t n_lo, std::size_t n_hi, std::size_t cap) {
  if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("need 1 <= n_lo <= n_hi");
  auto all = enumerate_layers(n_hi, cap);

  TransitionGraph graph;
  std::size_t total = 0;
  for (std::size_t k = n_lo; k <= n_hi; ++k) {
    total += all[k - 1].size();
    if (total > cap) throw CapExceeded(k, cap);
    graph.layers.push_back({k, std::move(all[k - 1]), {}});
  }

  for (std::size_t li = 0; li + 1 < graph.layers.size(); ++li) {
    auto& layer = graph.layers[li];
    const auto& next = graph.layers[li + 1];
    std::map<SetKey, std::size_t> index;
    for (std::size_t i = 0; i < next.sets.size(); ++i) index.emplace(next.sets[i].key(), i);
    for (std::size_t i = 0; i < layer.sets.size(); ++i) {
      for (std::size_t idx : max_error_indices(layer.sets[i])) {
        auto it = index.find(split_at(layer.sets[i], idx).key());
        if (it == index.end()) throw std::logic_error("split produced a set outside the next layer");
        layer.edges_out.push_back({i, it->second});
      }
    }
    std::sort(layer.edges_out.begin(), layer.edges_out.end(), [](const auto& a, const auto& b) {
      return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
  }
  return graph;
}

}  // namespace ifsq
