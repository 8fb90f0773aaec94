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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ifsquant/oracle.hpp"

namespace ifsq::oracle {

namespace {

std::vector<double> sorted_values(const SampleBatch& batch) {
  if (batch.values.empty()) throw std::invalid_argument("empty sample batch");
  std::vector<double> x = batch.values;
  std::sort(x.begin(), x.end());
  return x;
}

// Mean squared distance from sorted samples to their nearest sorted center.
double nearest_distortion(const std::vector<double>& x, const std::vector<double>& centers) {
  long double total = 0;
  std::size_t c = 0;
  for (double v : x) {
    while (c + 1 < centers.size() && std::abs(centers[c + 1] - v) <= std::abs(centers[c] - v)) ++c;
    const double d = v - centers[c];
    total += static_cast<long double>(d) * d;
  }
  return static_cast<double>(total / static_cast<long double>(x.size()));
}

double range_mean(const std::vector<double>& x, std::size_t lo, std::size_t hi) {
  long double s = 0;
  for (std::size_t i = lo; i < hi; ++i) s += x[i];
  return static_cast<double>(s / static_cast<long double>(hi - lo));
}

}  // namespace

Clustering lloyd(const SampleBatch& batch, std::span<const double> init, std::size_t max_iters, double tol) {
  if (init.empty()) throw std::invalid_argument("lloyd needs k >= 1");
  for (std::size_t i = 1; i < init.size(); ++i) {
    if (!(init[i - 1] < init[i])) throw std::invalid_argument("lloyd init must be strictly increasing");
  }
  const std::vector<double> x = sorted_values(batch);
  const std::size_t n = x.size();
  std::vector<long double> prefix(n + 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i];

  std::vector<double> centers(init.begin(), init.end());
  const std::size_t k = centers.size();
  std::vector<std::size_t> bounds(k + 1);
  Clustering out;
  for (out.iterations = 0; out.iterations < max_iters;) {
    ++out.iterations;
    bounds[0] = 0;
    bounds[k] = n;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const double mid = 0.5 * (centers[i] + centers[i + 1]);
      bounds[i + 1] = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), mid) - x.begin());
    }

    std::vector<double> next(k);
    bool reseeded = false;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t lo = bounds[i], hi = bounds[i + 1];
      if (hi > lo) {
        next[i] = static_cast<double>((prefix[hi] - prefix[lo]) / static_cast<long double>(hi - lo));
        continue;
      }
      // Empty cluster: move it to the sample farthest from its nearest center.
      double far_x = x.front(), far_d = -1.0;
      for (double v : x) {
        double d = std::numeric_limits<double>::infinity();
        for (double c : centers) d = std::min(d, std::abs(v - c));
        if (d > far_d) far_d = d, far_x = v;
      }
      next[i] = far_x;
      reseeded = true;
    }
    std::sort(next.begin(), next.end());

    double moved = 0.0;
    for (std::size_t i = 0; i < k; ++i) moved = std::max(moved, std::abs(next[i] - centers[i]));
    centers = std::move(next);
    if (!reseeded && moved < tol) break;
  }
  out.centers = centers;
  out.distortion = nearest_distortion(x, centers);
  return out;
}

Clustering lloyd_splitting(const SampleBatch& batch, std::size_t k, std::size_t max_iters, double tol) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > batch.values.size()) throw std::invalid_argument("k exceeds the number of samples");
  const std::vector<double> x = sorted_values(batch);
  const std::size_t n = x.size();
  std::vector<double> centers{range_mean(x, 0, n)};
  std::size_t iterations = 0;
  for (;;) {
    Clustering run = lloyd(batch, centers, max_iters, tol);
    iterations += run.iterations;
    centers = std::move(run.centers);
    if (centers.size() == k) {
      run.centers = centers;
      run.iterations = iterations;
      return run;
    }
    std::vector<std::size_t> bounds{0};
    for (std::size_t i = 0; i + 1 < centers.size(); ++i) {
      const double mid = 0.5 * (centers[i] + centers[i + 1]);
      bounds.push_back(static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), mid) - x.begin()));
    }
    bounds.push_back(n);
    std::size_t worst = 0;
    long double worst_sse = -1;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      long double sse = 0;
      for (std::size_t j = bounds[i]; j < bounds[i + 1]; ++j) {
        const long double d = static_cast<long double>(x[j]) - centers[i];
        sse += d * d;
      }
      if (sse > worst_sse) worst_sse = sse, worst = i;
    }
    const std::size_t lo = bounds[worst], hi = bounds[worst + 1];
    const auto cut = static_cast<std::size_t>(
        std::lower_bound(x.begin() + static_cast<std::ptrdiff_t>(lo), x.begin() + static_cast<std::ptrdiff_t>(hi),
                         centers[worst]) - x.begin());
    const double c = centers[worst];
    const double left = cut > lo ? range_mean(x, lo, cut) : std::nextafter(c, -1.0);
    const double right = hi > cut ? range_mean(x, cut, hi) : std::nextafter(c, 2.0);
    centers[worst] = left;
    centers.insert(centers.begin() + static_cast<std::ptrdiff_t>(worst) + 1, right);
    if (!(left < right)) {
      // Every sample in the cell sits at its center; seed from the farthest sample instead.
      centers.erase(centers.begin() + static_cast<std::ptrdiff_t>(worst) + 1);
      centers[worst] = c;
      double far_x = x.front(), far_d = -1.0;
      for (double v : x) {
        double d = std::numeric_limits<double>::infinity();
        for (double ctr : centers) d = std::min(d, std::abs(v - ctr));
        if (d > far_d) far_d = d, far_x = v;
      }
      centers.push_back(far_d > 0 ? far_x : std::nextafter(centers.back(), 2.0));
      std::sort(centers.begin(), centers.end());
      centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
      if (centers.size() < bounds.size()) throw std::runtime_error("sample has fewer than k distinct values");
    }
  }
}

Clustering kmeans_1d_exact(const SampleBatch& batch, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > batch.values.size()) throw std::invalid_argument("k exceeds the number of samples");
  const std::vector<double> x = sorted_values(batch);
  const std::size_t n = x.size();

  // Centered prefix sums keep the within-cluster cost well conditioned.
  const double shift = range_mean(x, 0, n);
  std::vector<long double> p1(n + 1, 0.0L), p2(n + 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    const long double y = static_cast<long double>(x[i]) - shift;
    p1[i + 1] = p1[i] + y;
    p2[i + 1] = p2[i] + y * y;
  }
  auto cost = [&](std::size_t i, std::size_t j) {  // samples [i, j)
    const long double s = p1[j] - p1[i];
    const long double c = (p2[j] - p2[i]) - s * s / static_cast<long double>(j - i);
    return c > 0 ? c : 0.0L;
  };

  // prev[j]: best cost of x[0, j) with m - 1 clusters; opt[m][j]: split point.
  constexpr long double inf = std::numeric_limits<long double>::infinity();
  std::vector<long double> prev(n + 1, inf), cur(n + 1, inf);
  std::vector<std::vector<std::uint32_t>> opt(k + 1);
  for (std::size_t j = 1; j <= n; ++j) prev[j] = cost(0, j);

  for (std::size_t m = 2; m <= k; ++m) {
    auto& split = opt[m];
    split.assign(n + 1, 0);
    std::fill(cur.begin(), cur.end(), inf);
    // Optimal split points are monotone in j, so solve by divide and conquer.
    auto solve = [&](auto&& self, std::size_t lo, std::size_t hi, std::size_t opt_lo, std::size_t opt_hi) -> void {
      if (lo > hi) return;
      const std::size_t mid = lo + (hi - lo) / 2;
      long double best = inf;
      std::size_t best_i = opt_lo;
      const std::size_t last = std::min(mid - 1, opt_hi);
      for (std::size_t i = opt_lo; i <= last; ++i) {
        const long double c = prev[i] + cost(i, mid);
        if (c < best) best = c, best_i = i;
      }
      cur[mid] = best;
      split[mid] = static_cast<std::uint32_t>(best_i);
      if (mid > lo) self(self, lo, mid - 1, opt_lo, best_i);
      self(self, mid + 1, hi, best_i, opt_hi);
    };
    solve(solve, m, n, m - 1, n - 1);
    std::swap(prev, cur);
  }

  std::vector<std::size_t> bounds(k + 1);
  bounds[k] = n;
  for (std::size_t m = k; m >= 2; --m) bounds[m - 1] = opt[m][bounds[m]];
  bounds[0] = 0;

  Clustering out;
  for (std::size_t m = 0; m < k; ++m) out.centers.push_back(range_mean(x, bounds[m], bounds[m + 1]));
  out.distortion = nearest_distortion(x, out.centers);
  return out;
}

}  // namespace ifsq::oracle
