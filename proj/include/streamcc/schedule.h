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
#include <vector>

namespace streamcc {

/// When queries fire, in units of points seen.
struct QuerySchedule {
  enum class Mode { kFixed, kPoisson };

  Mode mode = Mode::kFixed;
  /// Fixed mode: one query every `interval` points.
  std::uint64_t interval = 100;
  /// Poisson mode: exponential inter-arrival gaps with mean 1 / rate.
  double rate = 0.01;
  std::uint64_t seed = 0;

  static QuerySchedule fixed(std::uint64_t q) { return {Mode::kFixed, q, 0.0, 0}; }
  static QuerySchedule poisson(double rate, std::uint64_t seed) {
    return {Mode::kPoisson, 0, rate, seed};
  }

  void validate() const;
};

/// Ascending, duplicate-free point counts in [1, n_points] after which a
/// query fires. Poisson arrival times are rounded up to whole points.
std::vector<std::uint64_t> schedule_queries(const QuerySchedule& s,
                                            std::uint64_t n_points);

}  // namespace streamcc
