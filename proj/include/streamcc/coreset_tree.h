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
#include <vector>

#include "streamcc/coreset.h"

namespace streamcc {

/// Merge-and-reduce coreset tree with merge degree r.
///
/// Level j holds the level-j buckets. Appending base buckets behaves like
/// incrementing a base-r counter: whenever a level collects r buckets they
/// are reduced into one bucket at the next level. After every update level i
/// holds exactly the i-th base-r digit of N buckets.
class CoresetTree {
 public:
  CoresetTree(std::uint64_t r, CoresetConfig cfg);

  /// Takes base bucket N+1. Throws std::invalid_argument unless `b` is level
  /// 0 with span [N+1, N+1].
  void update(Bucket b);

  /// Every stored bucket, lowest level first and ordered by span within a
  /// level. Empty when nothing has been ingested.
  std::vector<Bucket> coreset() const;

  /// Highest nonempty level. Throws std::logic_error when N = 0.
  std::uint32_t max_level() const;

  std::uint64_t r() const { return r_; }
  std::uint64_t bucket_count() const { return n_; }
  const CoresetConfig& config() const { return cfg_; }

  const std::vector<std::vector<Bucket>>& levels() const { return levels_; }

  /// Number of build_coreset calls made by updates so far.
  std::uint64_t merge_count() const { return merges_; }

  std::size_t stored_buckets() const;
  std::size_t stored_points() const;

 private:
  std::uint64_t r_;
  CoresetConfig cfg_;
  std::uint64_t n_ = 0;
  std::uint64_t merges_ = 0;
  std::vector<std::vector<Bucket>> levels_;
};

}  // namespace streamcc
