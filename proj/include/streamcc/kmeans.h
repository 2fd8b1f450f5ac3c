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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "streamcc/point_set.h"
#include "streamcc/random.h"

namespace streamcc {

/// Sum of squared coordinate differences. Throws std::invalid_argument on a
/// dimension mismatch.
double squared_distance(std::span<const double> x, std::span<const double> y);

struct Nearest {
  std::size_t index = 0;
  double distance2 = 0.0;
};

/// Nearest center by squared distance; ties go to the lowest index.
Nearest nearest_center(const CenterSet& centers, std::span<const double> x);

/// Weighted k-means objective: sum over points of weight times squared
/// distance to the closest center. An empty point set costs 0.
double clustering_cost(const PointSet& points, const CenterSet& centers);

/// k-means++ seeding with weighted D^2 sampling.
///
/// The first center is drawn with probability proportional to weight, each
/// following one proportional to weight * D^2(x, chosen). Sampling stops
/// early once every point coincides with a chosen center, so when the input
/// holds at most k distinct points all of them are returned. Each returned
/// center carries the weight of the points nearest to it.
CenterSet kmeans_pp(const PointSet& points, std::size_t k, Rng& rng);

struct LloydResult {
  CenterSet centers;
  double cost = 0.0;
  std::size_t iterations = 0;
  /// cost_history[0] is the cost of the initial centers, then one entry per
  /// iteration performed.
  std::vector<double> cost_history;
};

/// Weighted Lloyd iterations. Stops after max_iters or when no assignment
/// changes. A center that loses all its points keeps its position.
LloydResult lloyd_refine(const PointSet& points, CenterSet centers,
                         std::size_t max_iters);

/// Runs `runs` independent k-means++ + Lloyd trials, each seeded by
/// derive_seed(seed, {run}), and returns the cheapest. Ties keep the earlier
/// run.
CenterSet best_of_runs(const PointSet& points, std::size_t k,
                       std::size_t runs, std::size_t lloyd_iters,
                       std::uint64_t seed);

/// Sets every center's weight to the total weight of points assigned to it.
void assign_center_weights(const PointSet& points, CenterSet& centers);

/// MacQueen's sequential k-means: the first k stream points become the
/// centers, then each new point pulls its nearest center to the running
/// centroid.
class SequentialKMeans {
 public:
  explicit SequentialKMeans(std::size_t k);

  /// Feeds one point. While fewer than k points have been seen the point is
  /// recorded as a new center with weight 1.
  void update(std::span<const double> p);

  bool initialized() const { return centers_.size() == k_; }
  std::size_t k() const { return k_; }
  const CenterSet& centers() const { return centers_; }

 private:
  std::size_t k_;
  CenterSet centers_;
};

/// Moves `centers[index]` to (w*c + p)/(w + 1) and bumps its weight by one.
void move_toward(CenterSet& centers, std::size_t index,
                 std::span<const double> p);

/// One MacQueen step: assigns p to its nearest center and moves it. Returns
/// the assignment made before the move. Throws std::logic_error when `state`
/// holds no centers.
Nearest sequential_update(CenterSet& state, std::span<const double> p);

}  // namespace streamcc
