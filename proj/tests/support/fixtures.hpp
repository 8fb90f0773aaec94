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

// Shared helpers for the test binaries: a small seeded generator of words
// and regions, and reference optimal-set listings as (kind, word) sets.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ifsquant/ifsquant.hpp"

namespace ifsq::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }

  // Letters skewed toward 1 and 2, like the measure itself, capped at max_letter.
  Letter letter(Letter max_letter) {
    Letter j = 1;
    while (j < max_letter && below(8) < 5) ++j;
    if (below(6) == 0) j = 1 + below(max_letter);
    return j;
  }

  Word word(std::size_t min_len, std::size_t max_len, Letter max_letter) {
    std::vector<Letter> w(min_len + below(max_len - min_len + 1));
    for (auto& l : w) l = letter(max_letter);
    return Word(std::move(w));
  }

  // A word with the same count of non-1 letters and the same weight as w, so
  // with the same probability, but usually a different shape.
  Word same_probability_as(const Word& w) {
    const std::size_t c = count_non_ones(w);
    const std::uint64_t weight = w.weight();
    // ones contribute 2 to the weight each, non-ones at least 3 each.
    const std::uint64_t max_ones = (weight - 3 * c) / 2;
    const std::uint64_t ones = c == 0 ? max_ones : below(max_ones + 1);
    std::uint64_t rest = weight - 2 * ones;
    std::vector<Letter> big(c, 2);
    rest -= 3 * c;
    while (rest > 0 && c > 0) {
      big[below(c)] += 1;
      --rest;
    }
    std::vector<Letter> letters(ones, 1);
    letters.insert(letters.end(), big.begin(), big.end());
    std::shuffle(letters.begin(), letters.end(), rng_);
    return Word(std::move(letters));
  }

  Region region(std::size_t max_len, Letter max_letter) {
    Word w = word(1, max_len, max_letter);
    return coin() ? Region::closed(std::move(w)) : Region::tail(std::move(w));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// "211" -> Closed([2,1,1]), "211,inf" -> Tail([2,1,1]). Single-digit letters.
inline Region region_from_label(std::string_view label) {
  const bool tail = label.ends_with(",inf");
  if (tail) label.remove_suffix(4);
  std::vector<Letter> letters;
  for (char ch : label) letters.push_back(static_cast<Letter>(ch - '0'));
  Word w(std::move(letters));
  return tail ? Region::tail(std::move(w)) : Region::closed(std::move(w));
}

inline std::set<Region> region_set(const std::vector<std::string>& labels) {
  std::set<Region> out;
  for (const auto& l : labels) out.insert(region_from_label(l));
  return out;
}

inline std::set<Region> region_set(const QuantizerSet& q) {
  const auto key = q.key();
  return {key.begin(), key.end()};
}

inline const std::vector<std::vector<std::string>>& listings16() {
  static const std::vector<std::vector<std::string>> v = {
      {"111", "111,inf", "12", "13", "13,inf", "211", "211,inf", "22", "23", "23,inf", "31", "32", "32,inf", "4",
       "5", "5,inf"},
      {"111", "111,inf", "12", "13", "13,inf", "21", "22", "23", "23,inf", "31", "32", "32,inf", "41", "41,inf",
       "5", "5,inf"},
      {"111", "111,inf", "121", "121,inf", "13", "13,inf", "21", "22", "23", "23,inf", "31", "32", "32,inf", "4",
       "5", "5,inf"},
  };
  return v;
}

inline const std::vector<std::string>& listing15() {
  static const std::vector<std::string> v = {"111", "111,inf", "12", "13",     "13,inf", "21", "22", "23",
                                             "23,inf", "31",   "32", "32,inf", "4",      "5",  "5,inf"};
  return v;
}

inline const std::vector<std::string>& listing18() {
  static const std::vector<std::string> v = {"111", "111,inf", "121", "121,inf", "13", "13,inf",
                                             "211", "211,inf", "22",  "23",      "23,inf", "31",
                                             "32",  "32,inf",  "41",  "41,inf",  "5",  "5,inf"};
  return v;
}

inline std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

}  // namespace ifsq::testing
