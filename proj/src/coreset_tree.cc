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
#include "streamcc/coreset_tree.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace streamcc {

CoresetTree::CoresetTree(std::uint64_t r, CoresetConfig cfg)
    : r_(r), cfg_(cfg) {
  if (r < 2) throw std::invalid_argument("merge degree r must be >= 2");
  cfg_.validate();
}

void CoresetTree::update(Bucket b) {
  if (b.level != 0 || b.span_left != n_ + 1 || b.span_right != n_ + 1) {
    throw std::invalid_argument(
        "coreset tree expects base bucket [" + std::to_string(n_ + 1) + "," +
        std::to_string(n_ + 1) + "], got [" + std::to_string(b.span_left) +
        "," + std::to_string(b.span_right) + "] at level " +
        std::to_string(b.level));
  }
  ++n_;
  if (levels_.empty()) levels_.emplace_back();
  levels_[0].push_back(std::move(b));

  for (std::size_t j = 0; levels_[j].size() >= r_; ++j) {
    Bucket merged = build_coreset(cfg_, levels_[j]);
    ++merges_;
    levels_[j].clear();
    if (levels_.size() == j + 1) levels_.emplace_back();
    levels_[j + 1].push_back(std::move(merged));
  }
}

std::vector<Bucket> CoresetTree::coreset() const {
  std::vector<Bucket> out;
  out.reserve(stored_buckets());
  for (const auto& level : levels_) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::uint32_t CoresetTree::max_level() const {
  if (n_ == 0) throw std::logic_error("max_level of an empty coreset tree");
  for (std::size_t j = levels_.size(); j-- > 0;) {
    if (!levels_[j].empty()) return static_cast<std::uint32_t>(j);
  }
  throw std::logic_error("coreset tree lost its buckets");
}

std::size_t CoresetTree::stored_buckets() const {
  std::size_t n = 0;
  for (const auto& level : levels_) n += level.size();
  return n;
}

std::size_t CoresetTree::stored_points() const {
  std::size_t n = 0;
  for (const auto& level : levels_) n += streamcc::stored_points(level);
  return n;
}

}  // namespace streamcc
