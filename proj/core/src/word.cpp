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

#include "ifsquant/word.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

namespace ifsq {

namespace {

void check_letters(std::span<const Letter> letters) {
  for (Letter l : letters) {
    if (l < 1) throw std::invalid_argument("word letters must be >= 1");
  }
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
  check_letters(letters_);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  check_letters(letters_);
}

Letter Word::last() const {
  if (letters_.empty()) throw std::invalid_argument("empty word has no last letter");
  return letters_.back();
}

std::uint64_t Word::weight() const {
  std::uint64_t total = letters_.size();
  for (Letter l : letters_) total += l;
  return total;
}

Word Word::child(Letter letter) const {
  std::vector<Letter> out = letters_;
  out.push_back(letter);
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out(a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

Word parent(const Word& w) {
  if (w.empty()) throw std::invalid_argument("no parent of empty word");
  return Word(std::vector<Letter>(w.letters().begin(), w.letters().end() - 1));
}

Word successor(const Word& w) {
  if (w.empty()) throw std::invalid_argument("no successor of empty word");
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  ++out.back();
  return Word(std::move(out));
}

std::size_t count_non_ones(const Word& w) {
  std::size_t c = 0;
  for (Letter l : w.letters()) c += (l != 1);
  return c;
}

std::string render(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  if (text.empty()) return Word{};
  std::size_t pos = 0;
  while (true) {
    std::size_t dot = text.find('.', pos);
    std::string_view seg = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (seg.empty()) throw std::invalid_argument("empty segment in word \"" + std::string(text) + "\"");
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(seg.data(), seg.data() + seg.size(), value);
    if (ec != std::errc{} || ptr != seg.data() + seg.size()) {
      throw std::invalid_argument("invalid letter \"" + std::string(seg) + "\"");
    }
    if (value < 1) throw std::invalid_argument("word letters must be >= 1");
    letters.push_back(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return Word(std::move(letters));
}

}  // namespace ifsq
