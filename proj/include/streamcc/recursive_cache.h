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
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "streamcc/coreset.h"
#include "streamcc/coreset_cache.h"

namespace streamcc {

struct RccQueryStats {
  QueryPath path = QueryPath::kCached;
  /// Candidate buckets summed over this node and every child it queried.
  std::size_t buckets_merged = 0;
  std::uint32_t level = 0;
};

/// Recursive coreset cache of a given order.
///
/// Like a coreset tree, level l keeps a list L_l of fewer than r buckets and
/// full lists are reduced into one bucket one level up. Each list is
/// mirrored by a child structure of the next lower order, which can
/// summarize the list by merging two buckets instead of up to r. A query
/// merges the cached summary of [1, major(N, r)] with the child summary of
/// the lowest nonempty level.
///
/// Merge degrees come from a table indexed by order. The default table is
/// r_i = 2^(2^i), so order 0 is a merge-degree-2 coreset cache.
class RccNode {
 public:
  /// Order `order` with the default degree table. Throws for order > 5.
  RccNode(std::uint32_t order, CoresetConfig cfg);

  /// Order degrees.size() - 1; degrees[i] is the merge degree at order i.
  RccNode(std::vector<std::uint64_t> degrees, CoresetConfig cfg);

  static std::vector<std::uint64_t> default_degrees(std::uint32_t order);

  /// Appends a bucket whose span starts right after the previous one.
  void update(Bucket b);

  /// Summary of everything ingested. Throws std::logic_error when empty.
  Bucket coreset();

  std::uint32_t order() const { return order_; }
  std::uint64_t r() const { return degrees_->at(order_); }
  std::uint64_t bucket_count() const { return n_; }

  const std::vector<std::vector<Bucket>>& levels() const { return lists_; }
  /// Child mirroring level l, or nullptr if not yet created (or order 0).
  const RccNode* child(std::size_t level) const;
  std::vector<std::uint64_t> cache_keys() const { return cache_.keys(); }

  /// Spans of every bucket passed to update() since this node was created.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ingested() const {
    return ingested_;
  }

  const RccQueryStats& last_query() const { return last_; }

  /// Buckets held in lists, cache and children, recursively.
  std::size_t stored_buckets() const;
  std::size_t stored_points() const;

  /// Calls fn on this node and then on every live descendant.
  void visit(const std::function<void(const RccNode&)>& fn) const;

 private:
  RccNode(std::shared_ptr<const std::vector<std::uint64_t>> degrees,
          std::uint32_t order, CoresetConfig cfg);

  RccNode& child_at(std::size_t level);

  std::shared_ptr<const std::vector<std::uint64_t>> degrees_;
  std::uint32_t order_;
  CoresetConfig cfg_;
  std::uint64_t n_ = 0;
  std::vector<std::vector<Bucket>> lists_;
  std::vector<std::unique_ptr<RccNode>> children_;
  CacheState cache_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ingested_;
  RccQueryStats last_;
};

}  // namespace streamcc
