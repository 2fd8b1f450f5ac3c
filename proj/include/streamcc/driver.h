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
#include <variant>
#include <vector>

#include "streamcc/coreset_cache.h"
#include "streamcc/coreset_tree.h"
#include "streamcc/kmeans.h"
#include "streamcc/recursive_cache.h"

namespace streamcc {

enum class StructureKind { kTree, kCache, kRecursive };

struct DriverConfig {
  CoresetConfig coreset;
  StructureKind kind = StructureKind::kCache;
  /// Merge degree for the tree and the cache.
  std::uint64_t r = 2;
  /// Merge degree per order for the recursive cache; empty selects the
  /// default table of order 3.
  std::vector<std::uint64_t> rcc_degrees;
  /// Query post-processing: best of `runs` k-means++ trials with up to
  /// `lloyd_iters` Lloyd iterations each.
  std::size_t runs = 5;
  std::size_t lloyd_iters = 20;
};

/// Batches raw points into base buckets of m points, feeds them to a
/// coreset structure and answers center queries from the structure's
/// summary plus the unflushed points.
class StreamClusterer {
 public:
  explicit StreamClusterer(DriverConfig cfg);

  /// Throws std::invalid_argument when p's dimension differs from earlier
  /// points.
  void push(std::span<const double> p);

  /// Weighted point set the next query clusters: the structure's summary
  /// unioned with the unflushed points at weight 1. Cache structures record
  /// the summary as a side effect. Throws std::logic_error before any point.
  PointSet query_input();

  /// best_of_runs over query_input(). Seeded from the configured seed and
  /// the number of points seen, so a fixed stream and query schedule
  /// always yields the same centers.
  CenterSet query();

  std::uint64_t points_seen() const { return points_seen_; }
  std::uint64_t buckets_delivered() const { return buckets_; }
  const PointSet& partial() const { return partial_; }
  const DriverConfig& config() const { return cfg_; }

  /// Buckets merged while assembling the last query's summary.
  std::size_t last_query_buckets_merged() const { return last_merged_; }

  /// Points held by the structure plus the partial buffer.
  std::size_t stored_points() const;

  const CoresetTree* tree() const { return std::get_if<CoresetTree>(&structure_); }
  const CoresetCache* cache() const {
    return std::get_if<CoresetCache>(&structure_);
  }
  const RccNode* recursive() const { return std::get_if<RccNode>(&structure_); }

 private:
  DriverConfig cfg_;
  std::variant<CoresetTree, CoresetCache, RccNode> structure_;
  PointSet partial_;
  std::uint64_t points_seen_ = 0;
  std::uint64_t buckets_ = 0;
  std::size_t last_merged_ = 0;
};

}  // namespace streamcc
