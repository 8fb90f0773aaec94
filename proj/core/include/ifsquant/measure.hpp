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

// The infinite self-similar measure P = sum_j p_j P o S_j^-1 on [0, 1] with
//   p_1 = 1/4, p_j = 3 / 2^(j+1) (j >= 2),
//   S_j(x) = x / 2^(j+1) + 1 - 1 / 2^(j-1).
// Every quantity here is exact.

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "ifsquant/rational.hpp"
#include "ifsquant/word.hpp"

namespace ifsq {

struct MeasureConstants {
  Rational mean;               // 4/7
  Rational variance;           // 288/3577
  Rational tail_factor_last1;  // 43/3
  Rational tail_factor_other;  // 43/9
  Rational tail_offset;        // 8/7
};

const MeasureConstants& constants();

// Recomputes the stored constants from the self-similarity fixed-point
// identities and the tail-error series. Returns false on any mismatch.
bool check_constants();

enum class RegionKind { Closed, Tail };

// Closed(w) is the cylinder J_w = S_w([0,1]). Tail(w) is the union of the
// later siblings J_{w-(l+j)}, j >= 1, where l is the last letter of w.
class Region {
 public:
  Region() = default;  // Closed(empty), the whole support
  static Region closed(Word w) { return Region(RegionKind::Closed, std::move(w)); }
  // Throws std::invalid_argument for the empty word.
  static Region tail(Word w);

  [[nodiscard]] RegionKind kind() const { return kind_; }
  [[nodiscard]] const Word& word() const { return word_; }
  [[nodiscard]] bool is_tail() const { return kind_ == RegionKind::Tail; }

  // Word first, then Closed < Tail.
  friend std::strong_ordering operator<=>(const Region& a, const Region& b) {
    if (auto c = a.word_ <=> b.word_; c != 0) return c;
    return a.kind_ <=> b.kind_;
  }
  friend bool operator==(const Region&, const Region&) = default;

 private:
  Region(RegionKind kind, Word w) : kind_(kind), word_(std::move(w)) {}

  RegionKind kind_ = RegionKind::Closed;
  Word word_;
};

struct Interval {
  Rational left;
  Rational right;
};

// x -> scale * x + offset.
struct AffineMap {
  Rational scale;
  Rational offset;
  [[nodiscard]] Rational operator()(const Rational& x) const { return scale * x + offset; }
};

Rational prob_letter(Letter j);
Rational prob_word(const Word& w);
Rational scale_word(const Word& w);
AffineMap word_map(const Word& w);
Rational apply_map(const Word& w, const Rational& x);

Interval region_interval(const Region& r);
Rational region_mass(const Region& r);
Rational centroid(const Region& r);

// E(X | X in J_k u J_{k+1} u ...), k >= 2.
Rational tail_conditional_mean(Letter k);

// Conditional mean over a union of pairwise disjoint regions. Throws on an
// empty list or on overlap (shared endpoints are allowed).
Rational centroid_union(std::span<const Region> regions);

// Integral of (x - centroid)^2 over the region.
Rational node_error(const Region& r);

// Partial sum of the first `terms` sibling contributions to the tail error,
// evaluated term by term. Converges from below to node_error(Tail(w)).
Rational tail_error_series(const Word& w, std::size_t terms);

// Integral of (x - x0)^2 over the region.
Rational distortion(const Region& r, const Rational& x0);
Rational distortion_union(std::span<const std::pair<Region, Rational>> pairs);

// Throws std::invalid_argument when two regions share interior points.
void require_disjoint(std::span<const Region> regions);

}  // namespace ifsq
