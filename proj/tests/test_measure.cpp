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
#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"

using namespace ifsq;
using R = Rational;

namespace {

Region C(Word w) { return Region::closed(std::move(w)); }
Region T(Word w) { return Region::tail(std::move(w)); }

R product_probability(const Word& w) {
  R p(1);
  for (Letter l : w.letters()) p *= prob_letter(l);
  return p;
}

}  // namespace

TEST_CASE("constants") {
  const auto& k = constants();
  CHECK(k.mean == R(4, 7));
  CHECK(k.variance == R(288, 3577));
  CHECK(k.tail_factor_last1 == R(43, 3));
  CHECK(k.tail_factor_other == R(43, 9));
  CHECK(k.tail_offset == R(8, 7));
  CHECK(check_constants());
}

TEST_CASE("letter and word probabilities") {
  CHECK(prob_letter(1) == R(1, 4));
  CHECK(prob_letter(2) == R(3, 8));
  CHECK(prob_letter(5) == R(3, 64));
  CHECK_THROWS_AS(prob_letter(0), std::invalid_argument);
  CHECK(prob_word({1}) == R(1, 4));
  CHECK(prob_word({2, 1}) == R(3, 32));
  CHECK(prob_word({}) == R(1));
  CHECK(scale_word({1}) == R(1, 4));
  CHECK(scale_word({1, 1}) == R(1, 16));
  CHECK(scale_word({2, 1}) == R(1, 32));
  CHECK(scale_word({}) == R(1));
}

TEST_CASE("maps") {
  CHECK(apply_map({2}, R(0)) == R(1, 2));
  CHECK(apply_map({2}, R(1)) == R(5, 8));
  CHECK(apply_map({1}, R(4, 7)) == R(1, 7));
  CHECK(apply_map({}, R(4, 7)) == R(4, 7));
  const AffineMap m = word_map({2, 1});
  CHECK(m.scale == scale_word({2, 1}));
  CHECK(m(R(4, 7)) == apply_map({2}, apply_map({1}, R(4, 7))));
}

TEST_CASE("region intervals") {
  auto iv = region_interval(C({2}));
  CHECK(iv.left == R(1, 2));
  CHECK(iv.right == R(5, 8));
  iv = region_interval(T({1}));
  CHECK(iv.left == R(1, 2));
  CHECK(iv.right == R(1));
  iv = region_interval(T({2, 1}));
  CHECK(iv.left == R(9, 16));
  CHECK(iv.right == R(5, 8));
  CHECK_THROWS_AS(Region::tail(Word{}), std::invalid_argument);
}

TEST_CASE("region masses") {
  CHECK(region_mass(T({1})) == R(3, 4));
  CHECK(region_mass(T({2})) == R(3, 8));
  CHECK(region_mass(C({2, 1})) == R(3, 32));
  // The tail of w holds the later siblings of w, so it is p_{w-} * P(letter > last).
  CHECK(region_mass(T({2, 1})) == R(3, 8) * R(3, 4));
  CHECK(region_mass(T({2, 3})) == R(3, 8) * R(3, 16));
}

TEST_CASE("centroids") {
  CHECK(centroid(C({1})) == R(1, 7));
  CHECK(centroid(T({1})) == R(5, 7));
  CHECK(centroid(T({2})) == R(6, 7));
  CHECK(centroid(C({1, 1})) == R(1, 28));
  CHECK(centroid(T({1, 1})) == R(5, 28));
  CHECK(centroid(C({})) == R(4, 7));
}

TEST_CASE("tail conditional mean") {
  CHECK(tail_conditional_mean(2) == R(5, 7));
  CHECK(tail_conditional_mean(3) == R(6, 7));
  CHECK(tail_conditional_mean(10) == R(895, 896));
  CHECK_THROWS_AS(tail_conditional_mean(1), std::invalid_argument);
  for (Letter k = 1; k <= 30; ++k) CHECK(tail_conditional_mean(k + 1) == centroid(T({k})));
}

TEST_CASE("centroid of unions") {
  std::vector<Region> a{C({2, 1}), C({2, 2})};
  CHECK(centroid_union(a) == R(11, 20));
  std::vector<Region> b{C({1}), C({2, 1, 1})};
  CHECK(centroid_union(b) == R(1363, 7840));
  std::vector<Region> c{T({2, 1, 1}), T({2, 1}), T({2})};
  CHECK(centroid_union(c) == R(5007, 6944));
  std::vector<Region> none;
  CHECK_THROWS_AS(centroid_union(none), std::invalid_argument);
  std::vector<Region> overlap{C({2}), C({2, 1})};
  CHECK_THROWS_AS(centroid_union(overlap), std::invalid_argument);
  std::vector<Region> overlap_tail{T({1}), C({3})};
  CHECK_THROWS_AS(centroid_union(overlap_tail), std::invalid_argument);
}

TEST_CASE("node errors") {
  CHECK(node_error(C({1})) == R(9, 7154));
  CHECK(node_error(C({2})) == R(27, 57232));
  CHECK(node_error(T({1})) == R(129, 7154));
  CHECK(node_error(C({})) == R(288, 3577));
  CHECK(node_error(C({1})) + node_error(T({1})) == R(69, 3577));
}

TEST_CASE("tail error series") {
  const R bound = R::pow2(-50);
  CHECK(abs(tail_error_series({2}, 60) - node_error(T({2}))) < bound);
  CHECK(tail_error_series({1}, 1) < node_error(T({1})));
  const R closed_form = R(43, 9) * prob_word({3}) * scale_word({3}) * scale_word({3}) * constants().variance;
  CHECK(abs(tail_error_series({3}, 60) - closed_form) < bound);
  CHECK_THROWS_AS(tail_error_series({}, 5), std::invalid_argument);
}

TEST_CASE("distortion") {
  CHECK(distortion(C({1}), R(7, 16)) == R(12015, 523264));
  CHECK(distortion(C({2}), R(5, 8)) == R(405, 261632));
  CHECK(distortion(T({1}), R(5, 7)) == R(129, 7154));

  std::vector<std::pair<Region, R>> a{{C({2, 1}), R(11, 20)}, {C({2, 2}), R(11, 20)}, {T({2, 2}), R(5, 8)}};
  CHECK(distortion_union(a) == R(2403, 10465280));
  std::vector<std::pair<Region, R>> b{{C({1}), R(1, 7)}, {T({1}), R(5, 7)}};
  CHECK(distortion_union(b) == R(69, 3577));
  std::vector<std::pair<Region, R>> none;
  CHECK(distortion_union(none) == R(0));
  std::vector<std::pair<Region, R>> overlap{{C({1}), R(0)}, {C({1, 1}), R(0)}};
  CHECK_THROWS_AS(distortion_union(overlap), std::invalid_argument);
}

TEST_CASE("property: probability closed form and equal-probability scales") {
  testing::Gen gen(101);
  for (int i = 0; i < 10000; ++i) {
    const Word w = gen.word(0, 10, 30);
    const R closed = R(BigInt(1), BigInt(1)) * R::pow2(-static_cast<std::int64_t>(w.weight()));
    R three(1);
    for (std::size_t c = 0; c < count_non_ones(w); ++c) three *= R(3);
    REQUIRE(prob_word(w) == three * closed);
    REQUIRE(prob_word(w) == product_probability(w));

    const Word t = gen.same_probability_as(w);
    REQUIRE(product_probability(t) == product_probability(w));
    REQUIRE(scale_word(t) == scale_word(w));
  }
}

TEST_CASE("property: partition of unity and total expectation") {
  R closed_mass(0);
  for (Letter k = 1; k <= 60; ++k) {
    closed_mass += prob_word({k});
    REQUIRE(closed_mass + region_mass(T({k})) == R(1));
  }
  testing::Gen gen(202);
  for (int i = 0; i < 2000; ++i) {
    const Word w = gen.word(0, 8, 12);
    const Region a = C(w.child(1)), b = T(w.child(1));
    REQUIRE(region_mass(a) + region_mass(b) == region_mass(C(w)));
    REQUIRE(region_mass(a) * centroid(a) + region_mass(b) * centroid(b) == region_mass(C(w)) * centroid(C(w)));
    if (w.empty()) continue;
    const Region s = C(successor(w)), st = T(successor(w)), tw = T(w);
    REQUIRE(region_mass(s) + region_mass(st) == region_mass(tw));
    REQUIRE(region_mass(s) * centroid(s) + region_mass(st) * centroid(st) == region_mass(tw) * centroid(tw));
  }
}

TEST_CASE("property: series is nondecreasing and converges to the closed form") {
  testing::Gen gen(303);
  for (int i = 0; i < 200; ++i) {
    const Word w = gen.word(1, 5, 8);
    const R target = node_error(T(w));
    R prev(0);
    for (std::size_t m : {1u, 2u, 5u, 10u, 30u, 60u}) {
      const R s = tail_error_series(w, m);
      REQUIRE(s >= prev);
      REQUIRE(s <= target);
      prev = s;
    }
    REQUIRE(target - prev < R::pow2(-40) * target);
  }
}

TEST_CASE("property: distortion is minimised exactly at the centroid") {
  testing::Gen gen(404);
  for (int i = 0; i < 2000; ++i) {
    const Region r = gen.region(6, 10);
    const R c = centroid(r);
    REQUIRE(distortion(r, c) == node_error(r));
    const R x0(static_cast<long>(gen.below(1000)), 999);
    if (x0 == c) continue;
    REQUIRE(distortion(r, x0) > node_error(r));
    REQUIRE(distortion(r, x0) == node_error(r) + region_mass(r) * (c - x0) * (c - x0));
  }
}

TEST_CASE("property: intervals nest and centroids lie inside") {
  testing::Gen gen(505);
  for (int i = 0; i < 2000; ++i) {
    const Region r = gen.region(6, 10);
    const auto iv = region_interval(r);
    REQUIRE(iv.left < iv.right);
    REQUIRE(region_mass(r) > R(0));
    const R c = centroid(r);
    REQUIRE(iv.left <= c);
    REQUIRE(c <= iv.right);
    if (r.word().size() > 0 && !r.is_tail()) {
      const auto up = region_interval(C(parent(r.word())));
      REQUIRE(up.left <= iv.left);
      REQUIRE(iv.right <= up.right);
    }
  }
}
