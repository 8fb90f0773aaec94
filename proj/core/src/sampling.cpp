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
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "ifsquant/oracle.hpp"

namespace ifsq::oracle {

namespace {

constexpr char kMagic[8] = {'I', 'F', 'S', 'Q', 'S', 'M', 'P', '1'};

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(chunk) for every chunk index on a small worker pool.
template <class Body>
void for_each_chunk(std::size_t chunks, unsigned threads, Body body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) body(c);
    });
  }
}

std::mt19937_64 chunk_stream(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void put_u64(std::ostream& out, std::uint64_t v) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes, 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw std::runtime_error("truncated sample batch");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

// P(letter > j) = 3 / 2^(j+1) for every j >= 1; survival[j] holds that value.
struct LetterTables {
  static constexpr int kMax = 64;
  std::array<double, kMax + 2> survival{};
  std::array<double, kMax + 2> ratio{};   // 2^-(j+1)
  std::array<double, kMax + 2> offset{};  // 1 - 2^(1-j)
  LetterTables() {
    for (int j = 1; j <= kMax + 1; ++j) {
      survival[j] = std::ldexp(3.0, -(j + 1));
      ratio[j] = std::ldexp(1.0, -(j + 1));
      offset[j] = 1.0 - std::ldexp(1.0, 1 - j);
    }
  }
};

const LetterTables& tables() {
  static const LetterTables t;
  return t;
}

}  // namespace

Letter letter_from_uniform(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("uniform draw outside [0, 1)");
  // 1 - u >= 2^-53 for 53-bit draws, so the search ends by j = 53.
  const double v = 1.0 - u;
  const auto& t = tables();
  Letter j = 1;
  while (j <= LetterTables::kMax && v <= t.survival[j]) ++j;
  return j;
}

SampleBatch sample(std::size_t count, int depth, std::uint64_t seed, unsigned threads) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  if (depth < 1) throw std::invalid_argument("sample depth must be >= 1");
  SampleBatch batch{std::vector<double>(count), seed, depth, count};
  const double base = 4.0 / 7.0;
  const auto& t = tables();
  const std::size_t chunks = (count + kChunkSize - 1) / kChunkSize;
  for_each_chunk(chunks, threads, [&](std::size_t chunk) {
    auto rng = chunk_stream(seed, chunk);
    const std::size_t end = std::min(count, (chunk + 1) * kChunkSize);
    for (std::size_t i = chunk * kChunkSize; i < end; ++i) {
      double offset = 0.0, scale = 1.0;
      for (int d = 0; d < depth; ++d) {
        const auto j = static_cast<std::size_t>(letter_from_uniform(uniform01(rng)));
        offset += scale * t.offset[j];
        scale *= t.ratio[j];
      }
      batch.values[i] = offset + scale * base;
    }
  });
  return batch;
}

Estimate mc_distortion_estimate(const SampleBatch& batch, std::span<const double> centers, unsigned threads) {
  if (centers.empty()) throw std::invalid_argument("need at least one center");
  if (batch.values.empty()) throw std::invalid_argument("empty sample batch");
  std::vector<double> sorted(centers.begin(), centers.end());
  std::sort(sorted.begin(), sorted.end());

  const std::size_t n = batch.values.size();
  const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<long double> sum(chunks), sum_sq(chunks);
  for_each_chunk(chunks, threads, [&](std::size_t chunk) {
    long double s = 0, s2 = 0;
    const std::size_t end = std::min(n, (chunk + 1) * kChunkSize);
    for (std::size_t i = chunk * kChunkSize; i < end; ++i) {
      const double x = batch.values[i];
      auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
      double best = std::numeric_limits<double>::infinity();
      if (it != sorted.end()) best = (*it - x) * (*it - x);
      if (it != sorted.begin()) best = std::min(best, (x - *(it - 1)) * (x - *(it - 1)));
      s += best;
      s2 += static_cast<long double>(best) * best;
    }
    sum[chunk] = s;
    sum_sq[chunk] = s2;
  });

  long double total = 0, total_sq = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    total += sum[c];
    total_sq += sum_sq[c];
  }
  const long double mean = total / static_cast<long double>(n);
  long double var = n > 1 ? (total_sq - total * mean) / static_cast<long double>(n - 1) : 0.0L;
  if (var < 0) var = 0;
  return {static_cast<double>(mean), static_cast<double>(std::sqrt(var / static_cast<long double>(n)))};
}

double mc_distortion(const SampleBatch& batch, std::span<const double> centers, unsigned threads) {
  return mc_distortion_estimate(batch, centers, threads).mean;
}

void write_batch(std::ostream& out, const SampleBatch& batch) {
  out.write(kMagic, sizeof kMagic);
  put_u64(out, batch.values.size());
  for (double v : batch.values) put_u64(out, std::bit_cast<std::uint64_t>(v));
  if (!out) throw std::runtime_error("failed to write sample batch");
}

std::vector<double> read_batch(std::istream& in) {
  char magic[8];
  if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kMagic)) {
    throw std::runtime_error("not a sample batch (bad magic)");
  }
  const std::uint64_t count = get_u64(in);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) values.push_back(std::bit_cast<double>(get_u64(in)));
  return values;
}

}  // namespace ifsq::oracle
