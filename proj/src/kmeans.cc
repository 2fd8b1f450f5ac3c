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
#include "streamcc/kmeans.h"

#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>
#include <stdexcept>
#include <string>

namespace streamcc {

double squared_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("squared_distance: dimension mismatch (" +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

namespace {

// Unchecked variant for the hot loops; callers validate dimensions once.
inline double dist2(const double* a, const double* b, std::size_t d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return s;
}

Nearest nearest_unchecked(const CenterSet& centers, const double* x) {
  Nearest best{0, std::numeric_limits<double>::infinity()};
  const std::size_t d = centers.dim();
  const double* c = centers.coords().data();
  for (std::size_t j = 0; j < centers.size(); ++j) {
    const double v = dist2(c + j * d, x, d);
    if (v < best.distance2) best = {j, v};
  }
  return best;
}

void check_compatible(const PointSet& points, const CenterSet& centers) {
  if (centers.empty()) throw std::invalid_argument("empty center set");
  if (!points.empty() && points.dim() != centers.dim()) {
    throw std::invalid_argument("points and centers differ in dimension");
  }
}

// Index i such that the cumulative weight first exceeds target. Entries with
// zero mass are never chosen.
std::size_t sample_index(const std::vector<double>& mass, double target) {
  double acc = 0.0;
  std::size_t last_positive = mass.size();
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (mass[i] <= 0.0) continue;
    acc += mass[i];
    last_positive = i;
    if (acc > target) return i;
  }
  return last_positive;
}

}  // namespace

Nearest nearest_center(const CenterSet& centers, std::span<const double> x) {
  if (centers.empty()) throw std::invalid_argument("empty center set");
  if (x.size() != centers.dim()) {
    throw std::invalid_argument("nearest_center: dimension mismatch");
  }
  return nearest_unchecked(centers, x.data());
}

double clustering_cost(const PointSet& points, const CenterSet& centers) {
  check_compatible(points, centers);
  CompensatedSum total;
  const std::size_t d = points.dim();
  const double* base = points.coords().data();
  for (std::size_t i = 0; i < points.size(); ++i) {
    total.add(points.weight(i) *
              nearest_unchecked(centers, base + i * d).distance2);
  }
  return total.value();
}

void assign_center_weights(const PointSet& points, CenterSet& centers) {
  check_compatible(points, centers);
  std::vector<double> mass(centers.size(), 0.0);
  const std::size_t d = points.dim();
  for (std::size_t i = 0; i < points.size(); ++i) {
    mass[nearest_unchecked(centers, points.coords().data() + i * d).index] +=
        points.weight(i);
  }
  for (std::size_t j = 0; j < centers.size(); ++j) {
    centers.set_weight(j, mass[j]);
  }
}

CenterSet kmeans_pp(const PointSet& points, std::size_t k, Rng& rng) {
  if (k == 0) throw std::invalid_argument("kmeans_pp: k must be >= 1");
  if (points.empty()) throw std::invalid_argument("kmeans_pp: empty input");

  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  const double* base = points.coords().data();

  CenterSet centers(d);
  const std::size_t first =
      sample_index(points.weights(), rng.uniform() * points.total_weight());
  centers.push_back(points.point(first));

  // mass[i] = w_i * D^2(x_i, chosen); kept incrementally.
  std::vector<double> best_d2(n);
  std::vector<double> mass(n);
  for (std::size_t i = 0; i < n; ++i) {
    best_d2[i] = dist2(base + i * d, base + first * d, d);
  }

  while (centers.size() < k) {
    CompensatedSum total;
    for (std::size_t i = 0; i < n; ++i) {
      mass[i] = points.weight(i) * best_d2[i];
      total.add(mass[i]);
    }
    const double t = total.value();
    if (!(t > 0.0)) break;  // every point sits on a chosen center
    const std::size_t next = sample_index(mass, rng.uniform() * t);
    centers.push_back(points.point(next));
    const double* c = base + next * d;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = dist2(base + i * d, c, d);
      if (v < best_d2[i]) best_d2[i] = v;
    }
  }

  assign_center_weights(points, centers);
  return centers;
}

LloydResult lloyd_refine(const PointSet& points, CenterSet centers,
                         std::size_t max_iters) {
  check_compatible(points, centers);
  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  const std::size_t k = centers.size();
  const double* base = points.coords().data();

  LloydResult out;
  std::vector<std::size_t> assign(n, k);  // k means "unassigned"
  std::vector<double> sums(k * d);
  std::vector<double> mass(k);

  auto assign_all = [&]() {
    bool changed = false;
    CompensatedSum cost;
    for (std::size_t i = 0; i < n; ++i) {
      const Nearest nc = nearest_unchecked(centers, base + i * d);
      if (nc.index != assign[i]) {
        assign[i] = nc.index;
        changed = true;
      }
      cost.add(points.weight(i) * nc.distance2);
    }
    return std::pair{changed, cost.value()};
  };

  auto [changed, cost] = assign_all();
  out.cost_history.push_back(cost);

  for (std::size_t it = 0; it < max_iters; ++it) {
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(mass.begin(), mass.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = points.weight(i);
      const double* x = base + i * d;
      double* s = sums.data() + assign[i] * d;
      for (std::size_t t = 0; t < d; ++t) s[t] += w * x[t];
      mass[assign[i]] += w;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (mass[j] <= 0.0) continue;
      auto c = centers.center(j);
      for (std::size_t t = 0; t < d; ++t) c[t] = sums[j * d + t] / mass[j];
    }
    ++out.iterations;
    std::tie(changed, cost) = assign_all();
    out.cost_history.push_back(cost);
    if (!changed) break;
  }

  for (std::size_t j = 0; j < k; ++j) centers.set_weight(j, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    centers.set_weight(assign[i], centers.weight(assign[i]) + points.weight(i));
  }
  out.cost = cost;
  out.centers = std::move(centers);
  return out;
}

CenterSet best_of_runs(const PointSet& points, std::size_t k,
                       std::size_t runs, std::size_t lloyd_iters,
                       std::uint64_t seed) {
  if (runs == 0) throw std::invalid_argument("best_of_runs: runs must be >= 1");
  CenterSet best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t run = 0; run < runs; ++run) {
    Rng rng(derive_seed(seed, {run}));
    LloydResult r = lloyd_refine(points, kmeans_pp(points, k, rng), lloyd_iters);
    if (r.cost < best_cost) {
      best_cost = r.cost;
      best = std::move(r.centers);
    }
  }
  return best;
}

void move_toward(CenterSet& centers, std::size_t index,
                 std::span<const double> p) {
  auto c = centers.center(index);
  const double w = centers.weight(index);
  for (std::size_t t = 0; t < c.size(); ++t) c[t] = (w * c[t] + p[t]) / (w + 1.0);
  centers.set_weight(index, w + 1.0);
}

Nearest sequential_update(CenterSet& state, std::span<const double> p) {
  if (state.empty()) {
    throw std::logic_error("sequential_update: state has no centers");
  }
  const Nearest nc = nearest_center(state, p);
  move_toward(state, nc.index, p);
  return nc;
}

SequentialKMeans::SequentialKMeans(std::size_t k) : k_(k) {
  if (k == 0) throw std::invalid_argument("SequentialKMeans: k must be >= 1");
}

void SequentialKMeans::update(std::span<const double> p) {
  if (!initialized()) {
    centers_.push_back(p, 1.0);
    return;
  }
  sequential_update(centers_, p);
}

}  // namespace streamcc
