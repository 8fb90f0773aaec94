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

#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ifsquant/ifsquant.hpp"

namespace ifsq::cli {

namespace {

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void check(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    out_ << name << (ok ? " PASS" : " FAIL") << why << '\n';
    if (!ok) ++failures_;
  }

  [[nodiscard]] std::size_t failures() const { return failures_; }

 private:
  std::ostream& out_;
  std::size_t failures_ = 0;
};

std::string point_list(const std::vector<Rational>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + pts[i].str();
  return s + "}";
}

}  // namespace

std::size_t verify(std::size_t n_max, std::ostream& out) {
  Checker c(out);

  c.check("measure constants", [] { return check_constants(); });

  const std::vector<std::pair<std::size_t, Rational>> golden_v = {
      {1, Rational(288, 3577)},         {2, Rational(69, 3577)},         {3, Rational(57, 14308)},
      {6, Rational(1383, 1831424)},     {15, Rational(27, 598016)},      {16, Rational(4635, 117211136)},
      {17, Rational(1989, 58605568)},   {18, Rational(3321, 117211136)},
  };
  for (const auto& golden : golden_v) {
    const auto& n = golden.first;
    const auto& v = golden.second;
    c.check("V_" + std::to_string(n) + " = " + to_fraction_string(v), [&n, &v] { return quantization_error(n) == v; });
  }

  const std::vector<std::vector<Rational>> golden_points = {
      {Rational(4, 7)},
      {Rational(1, 7), Rational(5, 7)},
      {Rational(1, 7), Rational(4, 7), Rational(6, 7)},
      {Rational(1, 7), Rational(4, 7), Rational(11, 14), Rational(13, 14)},
      {Rational(1, 28), Rational(5, 28), Rational(4, 7), Rational(11, 14), Rational(13, 14)},
  };
  for (std::size_t i = 0; i < golden_points.size(); ++i) {
    c.check("alpha_" + std::to_string(i + 1) + " = " + point_list(golden_points[i]),
            [&] { return optimal_set(i + 1).points() == golden_points[i]; });
  }

  const std::vector<std::pair<std::size_t, long>> golden_counts = {
      {15, 1}, {16, 3}, {17, 3}, {18, 1}, {19, 3}, {20, 3}, {21, 1}};
  for (const auto& golden : golden_counts) {
    const std::size_t n = golden.first;
    const long count = golden.second;
    c.check("card C_" + std::to_string(n) + " = " + std::to_string(count),
            [&] { return count_optimal_sets(n) == count; });
  }

  c.check("centroid a(2.1, 2.2) = 11/20", [] {
    const std::vector<Region> rs = {Region::closed(Word{2, 1}), Region::closed(Word{2, 2})};
    return centroid_union(rs) == Rational(11, 20);
  });
  c.check("distortion on J_2 about {11/20, 5/8} = 2403/10465280", [] {
    const std::vector<std::pair<Region, Rational>> ps = {{Region::closed(Word{2, 1}), Rational(11, 20)},
                                                         {Region::closed(Word{2, 2}), Rational(11, 20)},
                                                         {Region::tail(Word{2, 2}), Rational(5, 8)}};
    return distortion_union(ps) == Rational(2403, 10465280);
  });

  c.check("structure n = 1.." + std::to_string(n_max), [&] {
    GenerationState state;
    while (true) {
      if (auto report = validate_structure(state.snapshot()); !report) {
        out << "  n = " << state.n() << ": " << report.failure << '\n';
        return false;
      }
      if (state.n() >= n_max) return true;
      state.split();
    }
  });

  const std::size_t enum_max = std::min<std::size_t>(n_max, 40);
  c.check("card C_n enumeration = count, n = 1.." + std::to_string(enum_max), [&] {
    const auto layers = enumerate_layers(enum_max);
    for (std::size_t n = 1; n <= enum_max; ++n) {
      if (count_optimal_sets(n) != static_cast<unsigned long>(layers[n - 1].size())) {
        out << "  mismatch at n = " << n << '\n';
        return false;
      }
    }
    return true;
  });

  for (std::size_t n = 2; n <= std::min<std::size_t>(n_max, 12); ++n) {
    c.check("exhaustive V_" + std::to_string(n) + " = greedy V_" + std::to_string(n),
            [&] { return oracle::exhaustive_min(n).v == quantization_error(n); });
  }

  out << (c.failures() == 0 ? "ALL PASS" : std::to_string(c.failures()) + " FAILED") << '\n';
  return c.failures();
}

}  // namespace ifsq::cli
