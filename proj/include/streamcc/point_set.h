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

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamcc {

/// A single d-dimensional point with a strictly positive weight.
struct WeightedPoint {
  std::vector<double> coords;
  double weight = 1.0;
};

/// Neumaier-compensated running sum. Used wherever weights are accumulated
/// and later compared against an exact total.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Flat row-major storage of weighted points sharing one dimension.
///
/// Every weight is > 0. The dimension is fixed by the first point pushed
/// when the set was default-constructed with dim 0.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double weight(std::size_t i) const { return weights_[i]; }
  void set_weight(std::size_t i, double w);

  void push_back(std::span<const double> coords, double weight = 1.0);
  void push_back(const WeightedPoint& p) { push_back(p.coords, p.weight); }
  void append(const PointSet& other);
  void reserve(std::size_t n);
  void clear();

  WeightedPoint at(std::size_t i) const;
  double total_weight() const;

  const std::vector<double>& coords() const { return coords_; }
  const std::vector<double>& weights() const { return weights_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::vector<double> weights_;
};

/// A set of cluster centers with per-center accumulated weight.
///
/// The weight is bookkeeping for sequential maintenance (how much mass the
/// center currently represents); it may be zero.
class CenterSet {
 public:
  CenterSet() = default;
  explicit CenterSet(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  std::span<const double> center(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<double> center(std::size_t i) {
    return {coords_.data() + i * dim_, dim_};
  }
  double weight(std::size_t i) const { return weights_[i]; }
  void set_weight(std::size_t i, double w) { weights_[i] = w; }

  void push_back(std::span<const double> coords, double weight = 0.0);

  const std::vector<double>& coords() const { return coords_; }

  friend bool operator==(const CenterSet&, const CenterSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::vector<double> weights_;
};

}  // namespace streamcc
