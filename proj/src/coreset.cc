// Copyright 2026 The streamcc Authors
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
#include "streamcc/coreset.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "streamcc/kmeans.h"
#include "streamcc/random.h"

namespace streamcc {

Bucket make_base_bucket(PointSet points, std::uint64_t index) {
  if (index == 0) throw std::invalid_argument("bucket indices start at 1");
  return Bucket{std::move(points), index, index, 0};
}

void CoresetConfig::validate() const {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (m < k) {
    throw std::invalid_argument("bucket size m (" + std::to_string(m) +
                                ") must be >= k (" + std::to_string(k) + ")");
  }
}

void check_contiguous(std::span<const Bucket> inputs) {
  if (inputs.empty()) throw std::invalid_argument("no input buckets");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> spans;
  spans.reserve(inputs.size());
  for (const Bucket& b : inputs) {
    if (b.span_left == 0 || b.span_left > b.span_right) {
      throw std::invalid_argument("malformed bucket span");
    }
    spans.emplace_back(b.span_left, b.span_right);
  }
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].first != spans[i - 1].second + 1) {
      throw std::invalid_argument(
          "bucket spans [" + std::to_string(spans[i - 1].first) + "," +
          std::to_string(spans[i - 1].second) + "] and [" +
          std::to_string(spans[i].first) + "," +
          std::to_string(spans[i].second) + "] are not adjacent");
    }
  }
}

namespace {

struct Extent {
  std::uint64_t left;
  std::uint64_t right;
  std::uint32_t level;
};

Extent extent_of(std::span<const Bucket> inputs) {
  Extent e{inputs.front().span_left, inputs.front().span_right,
           inputs.front().level};
  for (const Bucket& b : inputs) {
    e.left = std::min(e.left, b.span_left);
    e.right = std::max(e.right, b.span_right);
    e.level = std::max(e.level, b.level);
  }
  return e;
}

PointSet concat(std::span<const Bucket> inputs) {
  std::size_t total = 0;
  for (const Bucket& b : inputs) total += b.points.size();
  PointSet out;
  for (const Bucket& b : inputs) {
    if (!b.points.empty()) {
      if (out.empty()) {
        out = PointSet(b.points.dim());
        out.reserve(total);
      }
      out.append(b.points);
    }
  }
  return out;
}

}  // namespace

Bucket union_buckets(std::span<const Bucket> inputs) {
  check_contiguous(inputs);
  const Extent e = extent_of(inputs);
  return Bucket{concat(inputs), e.left, e.right, e.level};
}

std::uint64_t construction_seed(const CoresetConfig& cfg, std::uint64_t left,
                                std::uint64_t right, std::uint32_t level) {
  return derive_seed(cfg.seed, {0xc0de5e7ULL, left, right, level});
}

Bucket build_coreset(const CoresetConfig& cfg, std::span<const Bucket> inputs,
                     std::uint64_t seed) {
  cfg.validate();
  check_contiguous(inputs);
  const Extent e = extent_of(inputs);
  PointSet all = concat(inputs);

  Bucket out{PointSet(all.dim()), e.left, e.right, e.level + 1};
  if (all.size() <= cfg.m) {
    out.points = std::move(all);
    return out;
  }

  Rng rng(seed);
  // kmeans_pp already credits each seed with the weight of its nearest
  // input points.
  CenterSet seeds = kmeans_pp(all, cfg.m, rng);
  out.points.reserve(seeds.size());
  for (std::size_t j = 0; j < seeds.size(); ++j) {
    // A seed is itself an input point, so its credited weight is > 0.
    out.points.push_back(seeds.center(j), seeds.weight(j));
  }
  return out;
}

Bucket build_coreset(const CoresetConfig& cfg, std::span<const Bucket> inputs) {
  check_contiguous(inputs);
  const Extent e = extent_of(inputs);
  return build_coreset(cfg, inputs,
                       construction_seed(cfg, e.left, e.right, e.level + 1));
}

std::size_t stored_points(std::span<const Bucket> buckets) {
  std::size_t n = 0;
  for (const Bucket& b : buckets) n += b.points.size();
  return n;
}

}  // namespace streamcc
