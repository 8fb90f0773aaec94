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

#include <string>
#include <string_view>

#include "ifsquant/engine.hpp"

namespace ifsq::io {

// {"n", "V", "V_float", "nodes": [{"word", "kind", "centroid",
// "centroid_float", "error"}]} with rationals as "num/den" strings.
std::string to_json(const QuantizerSet& set, int indent = 2);

// Parses the document written by to_json. Nodes are rebuilt from their word
// and kind; throws std::runtime_error when a stored rational disagrees with
// the recomputed value.
QuantizerSet quantizer_set_from_json(std::string_view text);

// Layers left to right, one rank per n, vertices labelled a_{k,i}.
std::string to_dot(const TransitionGraph& graph);

// {"layers": [{"n", "vertices": [{"label", "V", "nodes"}]}],
//  "edges": [{"from", "to"}]}
std::string to_json(const TransitionGraph& graph, int indent = 2);

}  // namespace ifsq::io
