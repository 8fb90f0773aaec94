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

#include "ifsquant/measure.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ifsq {

namespace {

BigInt pow3(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

// 3^c / 2^w as an exact rational.
Rational three_pow_over_two_pow(std::uint64_t c, std::uint64_t w) {
  mpq_class q;
  mpq_set_z(q.get_mpq_t(), pow3(c).get_mpz_t());
  mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(w));
  return Rational(std::move(q));
}

Rational dyadic(const BigInt& num, std::uint64_t exponent) {
  mpq_class q;
  mpq_set_z(q.get_mpq_t(), num.get_mpz_t());
  mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  return Rational(std::move(q));
}

}  // namespace

const MeasureConstants& constants() {
  static const MeasureConstants c{
      Rational(4, 7), Rational(288, 3577), Rational(43, 3), Rational(43, 9), Rational(8, 7)};
  return c;
}

bool check_constants() {
  const auto& c = constants();
  bool ok = true;

  // E(X) = E(X)/16 + E(X)/16 + 1/2
  ok &= c.mean == c.mean / 16 + c.mean / 16 + Rational(1, 2);
  // E(X^2) = (5/224) E(X^2) + 39/98
  const Rational second = c.variance + c.mean * c.mean;
  ok &= second == Rational(5, 224) * second + Rational(39, 98);

  // Tail factors against the term-by-term series.
  const Rational tol = Rational::pow2(-40);
  for (const Word& w : {Word{1}, Word{2}, Word{3}, Word{1, 1}, Word{2, 3}}) {
    const Rational factor = w.last() == 1 ? c.tail_factor_last1 : c.tail_factor_other;
    const Rational closed = factor * prob_word(w) * scale_word(w) * scale_word(w) * c.variance;
    const Rational series = tail_error_series(w, 60);
    ok &= series <= closed && (closed - series) < tol * closed;
  }

  // Tail centroid offset against the conditional tail mean.
  for (Letter k = 2; k <= 12; ++k) {
    const Word wk{k};
    ok &= tail_conditional_mean(k) == apply_map(wk, c.mean) + c.tail_offset * scale_word(wk);
  }
  return ok;
}

#ifndef NDEBUG
namespace {
[[maybe_unused]] const bool kConstantsChecked = [] {
  assert(check_constants() && "measure constants failed validation");
  return true;
}();
}  // namespace
#endif

Region Region::tail(Word w) {
  if (w.empty()) throw std::invalid_argument("tail region needs a nonempty word");
  return Region(RegionKind::Tail, std::move(w));
}

Rational prob_letter(Letter j) {
  if (j < 1) throw std::invalid_argument("letter must be >= 1");
  if (j == 1) return Rational(1, 4);
  return three_pow_over_two_pow(1, j + 1);
}

Rational prob_word(const Word& w) {
  return three_pow_over_two_pow(count_non_ones(w), w.weight());
}

Rational scale_word(const Word& w) { return Rational::pow2(-static_cast<std::int64_t>(w.weight())); }

AffineMap word_map(const Word& w) {
  // Offset kept as num / 2^exp; each letter j contributes
  // s_prefix * (1 - 2^(1-j)) and multiplies the scale by 2^-(j+1).
  BigInt num = 0;
  std::uint64_t exp = 0;
  for (Letter j : w.letters()) {
    BigInt head;
    mpz_ui_pow_ui(head.get_mpz_t(), 2, static_cast<unsigned long>(j - 1));
    head -= 1;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(j + 1));
    num += head * 4;
    exp += j + 1;
  }
  return AffineMap{dyadic(BigInt(1), exp), dyadic(num, exp)};
}

Rational apply_map(const Word& w, const Rational& x) { return word_map(w)(x); }

Interval region_interval(const Region& r) {
  if (!r.is_tail()) {
    const AffineMap m = word_map(r.word());
    return {m.offset, m.scale + m.offset};
  }
  return {apply_map(successor(r.word()), Rational(0)), apply_map(parent(r.word()), Rational(1))};
}

Rational region_mass(const Region& r) {
  if (!r.is_tail()) return prob_word(r.word());
  // Sum over j >= 1 of p_{w-(l+j)} = p_{w-} * 3 / 2^(l+1).
  const Letter l = r.word().last();
  return prob_word(parent(r.word())) * three_pow_over_two_pow(1, l + 1);
}

Rational centroid(const Region& r) {
  const auto& c = constants();
  if (!r.is_tail()) return apply_map(r.word(), c.mean);
  const Word next = successor(r.word());
  const AffineMap m = word_map(next);
  return m(c.mean) + c.tail_offset * m.scale;
}

Rational tail_conditional_mean(Letter k) {
  if (k < 2) throw std::invalid_argument("tail conditional mean needs k >= 2");
  return Rational(1) - constants().tail_offset * Rational::pow2(-static_cast<std::int64_t>(k));
}

void require_disjoint(std::span<const Region> regions) {
  std::vector<Interval> spans;
  spans.reserve(regions.size());
  for (const auto& r : regions) spans.push_back(region_interval(r));
  std::sort(spans.begin(), spans.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].left < spans[i - 1].right) throw std::invalid_argument("regions overlap");
  }
}

Rational centroid_union(std::span<const Region> regions) {
  if (regions.empty()) throw std::invalid_argument("centroid of an empty union");
  require_disjoint(regions);
  Rational mass_sum, moment;
  for (const auto& r : regions) {
    const Rational m = region_mass(r);
    mass_sum += m;
    moment += m * centroid(r);
  }
  return moment / mass_sum;
}

Rational node_error(const Region& r) {
  const auto& c = constants();
  const Word& w = r.word();
  const Rational s = scale_word(w);
  const Rational base = prob_word(w) * s * s * c.variance;
  if (!r.is_tail()) return base;
  return (w.last() == 1 ? c.tail_factor_last1 : c.tail_factor_other) * base;
}

Rational tail_error_series(const Word& w, std::size_t terms) {
  if (w.empty()) throw std::invalid_argument("tail series needs a nonempty word");
  if (terms < 1) throw std::invalid_argument("tail series needs at least one term");
  const auto& c = constants();
  const Rational center = centroid(Region::tail(w));
  const Word prefix = parent(w);
  Rational sum;
  for (std::size_t j = 1; j <= terms; ++j) {
    const Word sibling = prefix.child(w.last() + j);
    const AffineMap m = word_map(sibling);
    const Rational dev = m(c.mean) - center;
    sum += prob_word(sibling) * (m.scale * m.scale * c.variance + dev * dev);
  }
  return sum;
}

Rational distortion(const Region& r, const Rational& x0) {
  if (!r.is_tail()) {
    const auto& c = constants();
    const AffineMap m = word_map(r.word());
    const Rational dev = m(c.mean) - x0;
    return prob_word(r.word()) * (m.scale * m.scale * c.variance + dev * dev);
  }
  const Rational dev = centroid(r) - x0;
  return node_error(r) + region_mass(r) * dev * dev;
}

Rational distortion_union(std::span<const std::pair<Region, Rational>> pairs) {
  std::vector<Region> regions;
  regions.reserve(pairs.size());
  for (const auto& [r, x0] : pairs) regions.push_back(r);
  require_disjoint(regions);
  Rational total;
  for (const auto& [r, x0] : pairs) total += distortion(r, x0);
  return total;
}

}  // namespace ifsq
