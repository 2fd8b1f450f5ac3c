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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "streamcc/coreset.h"
#include "streamcc/coreset_tree.h"

namespace streamcc {

/// How a cached-coreset query assembled its answer.
enum class QueryPath {
  kCached,    // key N already cached; returned without work
  kTreeOnly,  // N has one nonzero digit; answer copies one tree level
  kCacheHit,  // cache[major(N)] plus the minor-level tree buckets
  kFallback,  // major(N) not cached; every tree bucket
};

const char* to_string(QueryPath p);

struct QueryStats {
  QueryPath path = QueryPath::kCached;
  /// Buckets in the candidate union (0 on kCached).
  std::size_t buckets_merged = 0;
  /// True when the answer went through build_coreset.
  bool reduced = false;
  std::uint32_t level = 0;
  /// Spans of the candidate buckets, in merge order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> candidate_spans;
};

/// Map from right endpoint u to a bucket spanning [1, u].
class CacheState {
 public:
  bool contains(std::uint64_t key) const { return entries_.count(key) != 0; }
  const Bucket& at(std::uint64_t key) const { return entries_.at(key); }
  void insert(std::uint64_t key, Bucket b);

  /// Drops every key outside prefixsum(n, r) and n itself.
  void evict(std::uint64_t n, std::uint64_t r);

  std::vector<std::uint64_t> keys() const;
  std::size_t size() const { return entries_.size(); }
  std::size_t stored_points() const;

 private:
  std::map<std::uint64_t, Bucket> entries_;
};

/// Coreset tree with coreset caching (CC).
///
/// Updates go straight to the tree. A query for N base buckets reuses the
/// cached summary of [1, major(N, r)] and merges it with the at most r - 1
/// tree buckets covering the minor part, so under a query after every
/// bucket each answer merges at most r buckets instead of the whole tree.
/// When N has a single nonzero digit the answer is the unreduced union of
/// that tree level (at most r - 1 buckets, keeping its level). When the
/// major prefix is not cached the query falls back to all tree buckets.
/// Every answer is cached under N and the cache is pruned to prefixsum(N, r)
/// plus N.
class CoresetCache {
 public:
  CoresetCache(std::uint64_t r, CoresetConfig cfg, bool caching = true);

  void update(Bucket b);

  /// Summary of [1, N]. Throws std::logic_error when N = 0.
  Bucket coreset();

  /// Level of the bucket returned by the last query. Throws
  /// std::logic_error before the first query.
  std::uint32_t returned_level() const;

  const QueryStats& last_query() const { return last_; }
  bool has_answered() const { return answered_; }

  std::vector<std::uint64_t> cache_keys() const { return cache_.keys(); }
  const CacheState& cache() const { return cache_; }
  const CoresetTree& tree() const { return tree_; }
  std::uint64_t r() const { return tree_.r(); }
  std::uint64_t bucket_count() const { return tree_.bucket_count(); }

  /// build_coreset calls made by queries.
  std::uint64_t query_reductions() const { return query_reductions_; }

  std::size_t stored_points() const;
  std::size_t stored_buckets() const;

 private:
  CoresetTree tree_;
  CacheState cache_;
  bool caching_;
  bool answered_ = false;
  QueryStats last_;
  std::uint64_t query_reductions_ = 0;
};

}  // namespace streamcc
