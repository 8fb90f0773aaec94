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

#include <optional>

#include "ifsquant/oracle.hpp"

namespace ifsq::oracle {

namespace {

// Enumerates every rooted subtree of the split tree with a fixed number of
// internal nodes. Candidates are split only in increasing index order, so
// each subtree is produced exactly once.
class SplitTreeSearch {
 public:
  SplitTreeSearch(std::size_t n, std::size_t cap, bool prune) : n_(n), cap_(cap), prune_(prune) {}

  ExhaustiveResult run() {
    candidates_.push_back(Node::of(Region::closed(Word{})));
    split_.push_back(false);
    current_ = candidates_.front().error;
    descend(0, n_ - 1, Rational(0));
    ExhaustiveResult out;
    out.v = *best_;
    out.frontier = make_set(best_frontier_);
    out.frontiers = frontiers_;
    out.states = states_;
    return out;
  }

 private:
  void descend(std::size_t start, std::size_t remaining, Rational committed) {
    if (++states_ > cap_) throw CapExceeded(n_, cap_);
    if (remaining == 0) {
      ++frontiers_;
      if (!best_ || current_ < *best_) {
        best_ = current_;
        best_frontier_.clear();
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
          if (!split_[i]) best_frontier_.push_back(candidates_[i].region);
        }
      }
      return;
    }
    const std::size_t size = candidates_.size();
    for (std::size_t idx = start; idx < size; ++idx) {
      // Candidates below idx stay leaves from here on.
      if (prune_ && best_ && committed > *best_) return;
      auto [first, second] = children(candidates_[idx]);
      const Rational delta = first.error + second.error - candidates_[idx].error;
      split_[idx] = true;
      candidates_.push_back(std::move(first));
      candidates_.push_back(std::move(second));
      split_.push_back(false);
      split_.push_back(false);
      current_ += delta;

      descend(idx + 1, remaining - 1, committed);

      current_ -= delta;
      candidates_.erase(candidates_.begin() + static_cast<std::ptrdiff_t>(size), candidates_.end());
      split_.resize(size);
      split_[idx] = false;
      committed += candidates_[idx].error;
    }
  }

  std::size_t n_, cap_;
  bool prune_;
  std::vector<Node> candidates_;
  std::vector<bool> split_;
  Rational current_;
  std::optional<Rational> best_;
  std::vector<Region> best_frontier_;
  std::size_t frontiers_ = 0, states_ = 0;
};

}  // namespace

ExhaustiveResult exhaustive_min(std::size_t n, std::size_t cap, bool prune) {
  if (n < 2 || n > 13) throw std::invalid_argument("exhaustive search supports 2 <= n <= 13");
  return SplitTreeSearch(n, cap, prune).run();
}

}  // namespace ifsq::oracle
