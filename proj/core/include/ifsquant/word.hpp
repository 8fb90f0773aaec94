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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ifsq {

using Letter = std::uint64_t;

// A finite word over the positive integers. Letter i of the word selects the
// i-th similitude of a composition S_{w1} o ... o S_{wk}. The empty word is a
// valid value and denotes the identity composition.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }

  // Throws std::invalid_argument on the empty word.
  [[nodiscard]] Letter last() const;

  // Sum of letters plus length; s_w = 2^-weight.
  [[nodiscard]] std::uint64_t weight() const;

  [[nodiscard]] Word child(Letter letter) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

[[nodiscard]] Word concat(const Word& a, const Word& b);

// Drops the last letter. Throws std::invalid_argument("no parent of empty word").
[[nodiscard]] Word parent(const Word& w);

// Same word with the last letter incremented. Throws on the empty word.
[[nodiscard]] Word successor(const Word& w);

[[nodiscard]] std::size_t count_non_ones(const Word& w);

// "2.1.1" for [2,1,1]; the empty word renders as "".
[[nodiscard]] std::string render(const Word& w);

// Inverse of render. Throws std::invalid_argument on empty segments,
// non-numeric segments, zero letters and overflow.
[[nodiscard]] Word parse_word(std::string_view text);

}  // namespace ifsq
