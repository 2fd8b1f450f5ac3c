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
#include "streamcc/coreset_cache.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "streamcc/radix.h"

namespace streamcc {

const char* to_string(QueryPath p) {
  switch (p) {
    case QueryPath::kCached:
      return "cached";
    case QueryPath::kTreeOnly:
      return "tree-only";
    case QueryPath::kCacheHit:
      return "cache-hit";
    case QueryPath::kFallback:
      return "fallback";
  }
  return "?";
}

void CacheState::insert(std::uint64_t key, Bucket b) {
  entries_.insert_or_assign(key, std::move(b));
}

void CacheState::evict(std::uint64_t n, std::uint64_t r) {
  const std::vector<std::uint64_t> keep = radix::prefixsum(n, r);
  for (auto it = entries_.begin(); it != entries_.end();) {
    const bool kept = it->first == n ||
                      std::binary_search(keep.begin(), keep.end(), it->first);
    it = kept ? std::next(it) : entries_.erase(it);
  }
}

std::vector<std::uint64_t> CacheState::keys() const {
  std::vector<std::uint64_t> out;
  out.reserve(entries_.size());
  for (const auto& [key, _] : entries_) out.push_back(key);
  return out;
}

std::size_t CacheState::stored_points() const {
  std::size_t n = 0;
  for (const auto& [_, b] : entries_) n += b.points.size();
  return n;
}

CoresetCache::CoresetCache(std::uint64_t r, CoresetConfig cfg, bool caching)
    : tree_(r, cfg), caching_(caching) {}

void CoresetCache::update(Bucket b) { tree_.update(std::move(b)); }

Bucket CoresetCache::coreset() {
  const std::uint64_t n = tree_.bucket_count();
  if (n == 0) throw std::logic_error("coreset query on an empty stream");
  const std::uint64_t r = tree_.r();

  QueryStats stats;
  if (caching_ && cache_.contains(n)) {
    stats.path = QueryPath::kCached;
    stats.level = cache_.at(n).level;
    last_ = std::move(stats);
    answered_ = true;
    return cache_.at(n);
  }

  const std::uint64_t major = radix::major(n, r);
  const radix::Term low = radix::decompose(n, r).front();
  const auto& levels = tree_.levels();

  std::vector<Bucket> candidate;
  auto take_minor_level = [&]() {
    if (low.exponent >= levels.size() ||
        levels[low.exponent].size() != low.digit) {
      throw std::logic_error("tree level " + std::to_string(low.exponent) +
                             " does not hold the minor digit of N = " +
                             std::to_string(n));
    }
    const auto& minor_level = levels[low.exponent];
    if (minor_level.front().span_left != major + 1 ||
        minor_level.back().span_right != n) {
      throw std::logic_error("minor-level buckets do not span [major+1, N]");
    }
    candidate.insert(candidate.end(), minor_level.begin(), minor_level.end());
  };

  if (major == 0) {
    stats.path = QueryPath::kTreeOnly;
    take_minor_level();
  } else if (caching_ && cache_.contains(major)) {
    stats.path = QueryPath::kCacheHit;
    candidate.push_back(cache_.at(major));
    take_minor_level();
  } else {
    stats.path = QueryPath::kFallback;
    candidate = tree_.coreset();
  }

  stats.buckets_merged = candidate.size();
  for (const Bucket& b : candidate) {
    stats.candidate_spans.emplace_back(b.span_left, b.span_right);
  }

  // When N has one nonzero digit the answer is a copy of the tree's buckets
  // at that level; only merges with a cached prefix are reduced.
  Bucket result;
  if (stats.path == QueryPath::kTreeOnly || candidate.size() == 1) {
    result = union_buckets(candidate);
  } else {
    result = build_coreset(tree_.config(), candidate);
    stats.reduced = true;
    ++query_reductions_;
  }
  if (result.span_left != 1 || result.span_right != n) {
    throw std::logic_error("cached coreset does not span [1, N]");
  }
  stats.level = result.level;

  if (caching_) {
    cache_.insert(n, result);
    cache_.evict(n, r);
  }
  last_ = std::move(stats);
  answered_ = true;
  return result;
}

std::uint32_t CoresetCache::returned_level() const {
  if (!answered_) throw std::logic_error("no query answered yet");
  return last_.level;
}

std::size_t CoresetCache::stored_points() const {
  return tree_.stored_points() + cache_.stored_points();
}

std::size_t CoresetCache::stored_buckets() const {
  return tree_.stored_buckets() + cache_.size();
}

}  // namespace streamcc
