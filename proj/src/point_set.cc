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
#include "streamcc/point_set.h"

#include <stdexcept>
#include <string>

namespace streamcc {

void PointSet::set_weight(std::size_t i, double w) {
  if (!(w > 0.0)) throw std::invalid_argument("point weight must be > 0");
  weights_[i] = w;
}

void PointSet::push_back(std::span<const double> coords, double weight) {
  if (!(weight > 0.0)) throw std::invalid_argument("point weight must be > 0");
  if (dim_ == 0 && weights_.empty()) dim_ = coords.size();
  if (coords.size() != dim_) {
    throw std::invalid_argument("dimension mismatch: expected " +
                                std::to_string(dim_) + ", got " +
                                std::to_string(coords.size()));
  }
  coords_.insert(coords_.end(), coords.begin(), coords.end());
  weights_.push_back(weight);
}

void PointSet::append(const PointSet& other) {
  if (other.empty()) return;
  if (dim_ == 0 && weights_.empty()) dim_ = other.dim_;
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  coords_.insert(coords_.end(), other.coords_.begin(), other.coords_.end());
  weights_.insert(weights_.end(), other.weights_.begin(), other.weights_.end());
}

void PointSet::reserve(std::size_t n) {
  coords_.reserve(n * dim_);
  weights_.reserve(n);
}

void PointSet::clear() {
  coords_.clear();
  weights_.clear();
}

WeightedPoint PointSet::at(std::size_t i) const {
  auto p = point(i);
  return {std::vector<double>(p.begin(), p.end()), weights_[i]};
}

double PointSet::total_weight() const {
  CompensatedSum s;
  for (double w : weights_) s.add(w);
  return s.value();
}

void CenterSet::push_back(std::span<const double> coords, double weight) {
  if (dim_ == 0 && weights_.empty()) dim_ = coords.size();
  if (coords.size() != dim_) throw std::invalid_argument("dimension mismatch");
  if (weight < 0.0) throw std::invalid_argument("center weight must be >= 0");
  coords_.insert(coords_.end(), coords.begin(), coords.end());
  weights_.push_back(weight);
}

}  // namespace streamcc
