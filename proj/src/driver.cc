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
#include "streamcc/driver.h"

#include <stdexcept>
#include <utility>

namespace streamcc {

namespace {

std::variant<CoresetTree, CoresetCache, RccNode> make_structure(
    const DriverConfig& cfg) {
  cfg.coreset.validate();
  switch (cfg.kind) {
    case StructureKind::kTree:
      return CoresetTree(cfg.r, cfg.coreset);
    case StructureKind::kCache:
      return CoresetCache(cfg.r, cfg.coreset);
    case StructureKind::kRecursive:
      return RccNode(cfg.rcc_degrees.empty() ? RccNode::default_degrees(3)
                                             : cfg.rcc_degrees,
                     cfg.coreset);
  }
  throw std::invalid_argument("unknown structure kind");
}

}  // namespace

StreamClusterer::StreamClusterer(DriverConfig cfg)
    : cfg_(std::move(cfg)), structure_(make_structure(cfg_)) {
  if (cfg_.runs == 0) throw std::invalid_argument("runs must be >= 1");
}

void StreamClusterer::push(std::span<const double> p) {
  if (points_seen_ > 0 && p.size() != partial_.dim()) {
    throw std::invalid_argument("point dimension does not match the stream");
  }
  if (partial_.empty()) partial_ = PointSet(p.size());
  partial_.push_back(p);
  ++points_seen_;
  if (partial_.size() < cfg_.coreset.m) return;

  Bucket b = make_base_bucket(std::move(partial_), ++buckets_);
  partial_ = PointSet(p.size());
  std::visit([&](auto& s) { s.update(std::move(b)); }, structure_);
}

PointSet StreamClusterer::query_input() {
  if (points_seen_ == 0) throw std::logic_error("query before any point");
  PointSet input(partial_.dim());
  last_merged_ = 0;
  if (buckets_ > 0) {
    if (auto* t = std::get_if<CoresetTree>(&structure_)) {
      const std::vector<Bucket> all = t->coreset();
      last_merged_ = all.size();
      for (const Bucket& b : all) input.append(b.points);
    } else if (auto* c = std::get_if<CoresetCache>(&structure_)) {
      input.append(c->coreset().points);
      last_merged_ = c->last_query().buckets_merged;
    } else {
      auto& rcc = std::get<RccNode>(structure_);
      input.append(rcc.coreset().points);
      last_merged_ = rcc.last_query().buckets_merged;
    }
  }
  input.append(partial_);
  return input;
}

CenterSet StreamClusterer::query() {
  const PointSet input = query_input();
  return best_of_runs(input, cfg_.coreset.k, cfg_.runs, cfg_.lloyd_iters,
                      derive_seed(cfg_.coreset.seed, {0x9e77ULL, points_seen_}));
}

std::size_t StreamClusterer::stored_points() const {
  const std::size_t held =
      std::visit([](const auto& s) { return s.stored_points(); }, structure_);
  return held + partial_.size();
}

}  // namespace streamcc
