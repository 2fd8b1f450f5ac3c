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
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "streamcc/point_set.h"

namespace streamcc {

/// A weighted summary of the stream points in base buckets
/// [span_left, span_right]. Level 0 means raw stream points; each coreset
/// construction adds one level on top of its deepest input.
struct Bucket {
  PointSet points;
  std::uint64_t span_left = 1;
  std::uint64_t span_right = 1;
  std::uint32_t level = 0;

  std::uint64_t width() const { return span_right - span_left + 1; }
  double total_weight() const { return points.total_weight(); }

  friend bool operator==(const Bucket&, const Bucket&) = default;
};

/// Wraps raw points as the level-0 bucket with span [index, index].
Bucket make_base_bucket(PointSet points, std::uint64_t index);

struct CoresetConfig {
  std::size_t k = 1;
  /// Points per base bucket and per coreset.
  std::size_t m = 20;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless m >= k >= 1.
  void validate() const;

  /// m defaults to 20k.
  static CoresetConfig with_default_m(std::size_t k, std::uint64_t seed) {
    return {k, 20 * k, seed};
  }
};

/// Throws std::invalid_argument unless `inputs` is nonempty and their spans
/// tile one contiguous interval without overlap (in any order).
void check_contiguous(std::span<const Bucket> inputs);

/// Concatenation without reduction. Level is the max input level.
Bucket union_buckets(std::span<const Bucket> inputs);

/// Reduces the union of `inputs` to at most cfg.m weighted points.
///
/// When the union has at most m points it is copied as is. Otherwise m
/// seeds are drawn from it by weighted k-means++ sampling and every input
/// point's weight is credited to its nearest seed, so the output is a subset
/// of the input points and total weight is conserved. The random stream is
/// fixed by `seed`; the output level is one more than the deepest input.
Bucket build_coreset(const CoresetConfig& cfg, std::span<const Bucket> inputs,
                     std::uint64_t seed);

/// Seed used for a construction over the given span and output level. Every
/// structure keys its constructions this way, so two structures merging the
/// same inputs produce the same bucket.
std::uint64_t construction_seed(const CoresetConfig& cfg, std::uint64_t left,
                                std::uint64_t right, std::uint32_t level);

/// build_coreset seeded by construction_seed for the merged span.
Bucket build_coreset(const CoresetConfig& cfg, std::span<const Bucket> inputs);

/// Total points stored across buckets.
std::size_t stored_points(std::span<const Bucket> buckets);

}  // namespace streamcc
