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
#include "streamcc/recursive_cache.h"

#include <stdexcept>
#include <string>

#include "streamcc/radix.h"

namespace streamcc {

namespace {

constexpr std::uint32_t kMaxDefaultOrder = 5;  // 2^(2^5) = 2^32

}  // namespace

std::vector<std::uint64_t> RccNode::default_degrees(std::uint32_t order) {
  if (order > kMaxDefaultOrder) {
    throw std::invalid_argument("RCC order " + std::to_string(order) +
                                " exceeds " + std::to_string(kMaxDefaultOrder) +
                                ": merge degree 2^(2^order) overflows");
  }
  std::vector<std::uint64_t> out;
  for (std::uint32_t i = 0; i <= order; ++i) {
    out.push_back(std::uint64_t{1} << (std::uint64_t{1} << i));
  }
  return out;
}

RccNode::RccNode(std::uint32_t order, CoresetConfig cfg)
    : RccNode(default_degrees(order), cfg) {}

RccNode::RccNode(std::vector<std::uint64_t> degrees, CoresetConfig cfg)
    : RccNode(std::make_shared<const std::vector<std::uint64_t>>(
                  std::move(degrees)),
              0, cfg) {
  if (degrees_->empty()) throw std::invalid_argument("empty degree table");
  for (std::uint64_t r : *degrees_) {
    if (r < 2) throw std::invalid_argument("RCC merge degrees must be >= 2");
  }
  order_ = static_cast<std::uint32_t>(degrees_->size() - 1);
}

RccNode::RccNode(std::shared_ptr<const std::vector<std::uint64_t>> degrees,
                 std::uint32_t order, CoresetConfig cfg)
    : degrees_(std::move(degrees)), order_(order), cfg_(cfg) {
  cfg_.validate();
}

RccNode& RccNode::child_at(std::size_t level) {
  if (children_.size() <= level) children_.resize(level + 1);
  if (!children_[level]) {
    children_[level] = std::unique_ptr<RccNode>(
        new RccNode(degrees_, order_ - 1, cfg_));
  }
  return *children_[level];
}

const RccNode* RccNode::child(std::size_t level) const {
  if (order_ == 0 || level >= children_.size()) return nullptr;
  return children_[level].get();
}

void RccNode::update(Bucket b) {
  if (!ingested_.empty() && b.span_left != ingested_.back().second + 1) {
    throw std::invalid_argument(
        "RCC expects a bucket starting at " +
        std::to_string(ingested_.back().second + 1) + ", got span [" +
        std::to_string(b.span_left) + "," + std::to_string(b.span_right) + "]");
  }
  ingested_.emplace_back(b.span_left, b.span_right);
  ++n_;

  const std::uint64_t r = this->r();
  auto append = [&](std::size_t level, Bucket bucket) {
    if (lists_.size() <= level) lists_.resize(level + 1);
    auto& list = lists_[level];
    // A list reaching r is flushed below and its child re-created, so the
    // child only needs the buckets of lists that stay below r.
    if (order_ > 0 && list.size() + 1 < r) child_at(level).update(bucket);
    list.push_back(std::move(bucket));
  };

  append(0, std::move(b));
  for (std::size_t level = 0; lists_[level].size() == r; ++level) {
    Bucket merged = build_coreset(cfg_, lists_[level]);
    lists_[level].clear();
    if (order_ > 0 && level < children_.size()) children_[level].reset();
    append(level + 1, std::move(merged));
  }
}

Bucket RccNode::coreset() {
  if (n_ == 0) throw std::logic_error("RCC query on an empty structure");
  RccQueryStats stats;
  if (cache_.contains(n_)) {
    stats.path = QueryPath::kCached;
    stats.level = cache_.at(n_).level;
    last_ = stats;
    return cache_.at(n_);
  }

  const std::uint64_t r = this->r();
  const std::uint64_t major = radix::major(n_, r);
  std::vector<Bucket> candidate;
  std::size_t child_merged = 0;

  auto summarize_level = [&](std::size_t level) {
    if (order_ > 0) {
      RccNode& c = child_at(level);
      candidate.push_back(c.coreset());
      child_merged += c.last_query().buckets_merged;
    } else {
      candidate.insert(candidate.end(), lists_[level].begin(),
                       lists_[level].end());
    }
  };

  if (major != 0 && cache_.contains(major)) {
    stats.path = QueryPath::kCacheHit;
    candidate.push_back(cache_.at(major));
    std::size_t lowest = 0;
    while (lists_[lowest].empty()) ++lowest;
    summarize_level(lowest);
  } else {
    stats.path = major == 0 ? QueryPath::kTreeOnly : QueryPath::kFallback;
    for (std::size_t level = 0; level < lists_.size(); ++level) {
      if (!lists_[level].empty()) summarize_level(level);
    }
  }

  stats.buckets_merged = candidate.size() + child_merged;
  Bucket result = stats.path == QueryPath::kTreeOnly || candidate.size() == 1
                      ? union_buckets(candidate)
                      : build_coreset(cfg_, candidate);
  if (result.span_left != ingested_.front().first ||
      result.span_right != ingested_.back().second) {
    throw std::logic_error("RCC summary does not cover its ingested span");
  }
  stats.level = result.level;
  cache_.insert(n_, result);
  cache_.evict(n_, r);
  last_ = stats;
  return result;
}

std::size_t RccNode::stored_buckets() const {
  std::size_t n = cache_.size();
  for (const auto& list : lists_) n += list.size();
  for (const auto& c : children_) {
    if (c) n += c->stored_buckets();
  }
  return n;
}

std::size_t RccNode::stored_points() const {
  std::size_t n = cache_.stored_points();
  for (const auto& list : lists_) n += streamcc::stored_points(list);
  for (const auto& c : children_) {
    if (c) n += c->stored_points();
  }
  return n;
}

void RccNode::visit(const std::function<void(const RccNode&)>& fn) const {
  fn(*this);
  for (const auto& c : children_) {
    if (c) c->visit(fn);
  }
}

}  // namespace streamcc
