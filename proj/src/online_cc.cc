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
#include "streamcc/online_cc.h"

#include <stdexcept>
#include <string>

namespace streamcc {

void OnlineConfig::validate() const {
  coreset.validate();
  if (r < 2) throw std::invalid_argument("merge degree r must be >= 2");
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  if (runs == 0) throw std::invalid_argument("runs must be >= 1");
}

namespace {

OnlineConfig validated(OnlineConfig cfg) {
  cfg.validate();
  return cfg;
}

}  // namespace

OnlineCC::OnlineCC(OnlineConfig cfg, const PointSet& warmup)
    : cfg_(validated(cfg)), cc_(cfg_.r, cfg_.coreset) {
  if (warmup.size() < cfg_.coreset.k) {
    throw std::invalid_argument("warmup needs at least k = " +
                                std::to_string(cfg_.coreset.k) + " points, got " +
                                std::to_string(warmup.size()));
  }
  Rng rng(derive_seed(cfg_.coreset.seed, {0x0417ULL}));
  centers_ = kmeans_pp(warmup, cfg_.coreset.k, rng);
  ++counters_.seedings;
  phi_prev_ = phi_now_ = clustering_cost(warmup, centers_);

  partial_ = PointSet(warmup.dim());
  for (std::size_t i = 0; i < warmup.size(); ++i) {
    push_partial(warmup.point(i));
  }
}

void OnlineCC::push_partial(std::span<const double> p) {
  partial_.push_back(p);
  ++points_seen_;
  if (partial_.size() == cfg_.coreset.m) {
    cc_.update(make_base_bucket(std::move(partial_), cc_.bucket_count() + 1));
    partial_ = PointSet(centers_.dim());
  }
}

void OnlineCC::update(std::span<const double> p) {
  const Nearest nc = sequential_update(centers_, p);
  phi_now_ += nc.distance2;
  push_partial(p);
}

CenterSet OnlineCC::recompute(const PointSet& summary) {
  const std::uint64_t seed =
      derive_seed(cfg_.coreset.seed, {0x0417ULL, ++fallback_epoch_});
  counters_.seedings += cfg_.runs;
  return best_of_runs(summary, cfg_.coreset.k, cfg_.runs, cfg_.lloyd_iters,
                      seed);
}

const CenterSet& OnlineCC::query() {
  ++counters_.queries;
  last_fell_back_ = false;
  if (!(phi_now_ > cfg_.alpha * phi_prev_)) return centers_;

  PointSet summary(centers_.dim());
  if (cc_.bucket_count() > 0) summary.append(cc_.coreset().points);
  summary.append(partial_);

  centers_ = recompute(summary);
  phi_prev_ = clustering_cost(summary, centers_);
  phi_now_ = phi_prev_ / (1.0 - cfg_.eps);
  ++counters_.fallbacks;
  last_fell_back_ = true;
  return centers_;
}

std::size_t OnlineCC::stored_points() const {
  return cc_.stored_points() + partial_.size() + centers_.size();
}

}  // namespace streamcc
