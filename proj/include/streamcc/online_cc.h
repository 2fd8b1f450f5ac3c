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

#include "streamcc/coreset_cache.h"
#include "streamcc/kmeans.h"

namespace streamcc {

struct OnlineConfig {
  CoresetConfig coreset;
  /// Merge degree of the backing coreset cache.
  std::uint64_t r = 2;
  /// Fallback threshold; must exceed 1.
  double alpha = 1.2;
  /// Coreset accuracy assumed when resetting the cost estimate; in (0, 1).
  double eps = 0.1;
  /// Center recomputation on fallback: best of `runs` k-means++ trials,
  /// each followed by up to `lloyd_iters` Lloyd iterations (0 disables).
  std::size_t runs = 5;
  std::size_t lloyd_iters = 20;

  void validate() const;
};

/// Counters used to check which queries did real work.
struct OnlineCounters {
  std::uint64_t queries = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t seedings = 0;  // k-means++ runs, including initialization
};

/// Online coreset cache: sequential k-means answers queries while a running
/// upper bound on the clustering cost stays within alpha of the cost
/// measured at the last recomputation; otherwise the centers are rebuilt
/// from a coreset of the whole stream.
///
/// phi_now starts as the warmup cost and grows by each new point's squared
/// distance to its nearest center before that center moves. A query that
/// finds phi_now > alpha * phi_prev falls back: it recomputes centers on
/// the coreset cache summary plus the unflushed bucket, sets phi_prev to
/// their cost on that summary and phi_now to phi_prev / (1 - eps).
class OnlineCC {
 public:
  /// Seeds the centers with k-means++ on `warmup` (at least k points). The
  /// warmup points also enter the current bucket, so the coreset path
  /// covers the whole stream.
  OnlineCC(OnlineConfig cfg, const PointSet& warmup);

  void update(std::span<const double> p);
  const CenterSet& query();

  double phi_now() const { return phi_now_; }
  double phi_prev() const { return phi_prev_; }
  const CenterSet& centers() const { return centers_; }
  const OnlineCounters& counters() const { return counters_; }
  const CoresetCache& cache() const { return cc_; }
  const PointSet& partial() const { return partial_; }
  bool last_query_fell_back() const { return last_fell_back_; }
  std::uint64_t points_seen() const { return points_seen_; }
  const OnlineConfig& config() const { return cfg_; }

  std::size_t stored_points() const;

 private:
  void push_partial(std::span<const double> p);
  CenterSet recompute(const PointSet& summary);

  OnlineConfig cfg_;
  CoresetCache cc_;
  PointSet partial_;
  CenterSet centers_;
  double phi_prev_ = 0.0;
  double phi_now_ = 0.0;
  std::uint64_t points_seen_ = 0;
  std::uint64_t fallback_epoch_ = 0;
  bool last_fell_back_ = false;
  OnlineCounters counters_;
};

}  // namespace streamcc
