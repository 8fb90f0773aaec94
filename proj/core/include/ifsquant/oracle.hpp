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

// Independent checks of the exact engine: Monte Carlo sampling of the
// measure, Lloyd iteration and globally optimal 1-D k-means on samples, and
// exhaustive search over every frontier of the split tree.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ifsquant/engine.hpp"

namespace ifsq::oracle {

inline constexpr std::size_t kChunkSize = 65536;
inline constexpr int kDefaultDepth = 40;

struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  int depth = kDefaultDepth;
  std::size_t count = 0;
};

// Draws one letter with P(j) = p_j from a uniform u in [0, 1).
Letter letter_from_uniform(double u);

// Ancestral samples S_{w1..w_depth}(4/7). Chunks of kChunkSize values use
// independent streams seeded from (seed, chunk index), so the batch does not
// depend on `threads` (0 = hardware concurrency).
SampleBatch sample(std::size_t count, int depth, std::uint64_t seed, unsigned threads = 0);

struct Clustering {
  std::vector<double> centers;  // sorted
  double distortion = 0.0;      // mean squared distance to the nearest center
  std::size_t iterations = 0;
};

// Lloyd iteration from `init` (strictly increasing). Stops when no center
// moves by tol or more, or after max_iters. An empty cluster is reseeded at
// the sample farthest from its nearest center.
Clustering lloyd(const SampleBatch& batch, std::span<const double> init, std::size_t max_iters = 1000,
                 double tol = 1e-12);

// Lloyd grown one center at a time: after each run the cell with the largest
// squared error is split at its center into two cells seeded by their means.
Clustering lloyd_splitting(const SampleBatch& batch, std::size_t k, std::size_t max_iters = 1000,
                           double tol = 1e-12);

// Globally optimal k-clustering of the sample under squared error, by
// interval dynamic programming with divide-and-conquer argmin search.
Clustering kmeans_1d_exact(const SampleBatch& batch, std::size_t k);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

Estimate mc_distortion_estimate(const SampleBatch& batch, std::span<const double> centers, unsigned threads = 0);
double mc_distortion(const SampleBatch& batch, std::span<const double> centers, unsigned threads = 0);

struct ExhaustiveResult {
  Rational v;
  QuantizerSet frontier;
  std::size_t frontiers = 0;  // complete frontiers evaluated
  std::size_t states = 0;     // search states visited
};

inline constexpr std::size_t kDefaultExhaustiveCap = 10'000'000;

// Minimum exact distortion over all ancestor-closed split sets of size n-1
// in the split tree rooted at Closed(empty), not only greedy-reachable ones.
// 2 <= n <= 13. Branches whose committed error already exceeds the best
// complete V are cut unless `prune` is false. Throws CapExceeded when more
// than `cap` states are visited.
ExhaustiveResult exhaustive_min(std::size_t n, std::size_t cap = kDefaultExhaustiveCap, bool prune = true);

// Flat little-endian binary: "IFSQSMP1", u64 count, then count f64 values.
void write_batch(std::ostream& out, const SampleBatch& batch);
std::vector<double> read_batch(std::istream& in);

}  // namespace ifsq::oracle
