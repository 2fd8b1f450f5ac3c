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
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "streamcc/point_set.h"

namespace streamcc {

/// Error raised while parsing numeric CSV input; carries the 1-based line.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CsvOptions {
  /// Skip the first non-blank line.
  bool header = false;
  /// When set, the rows are returned in a uniformly shuffled order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Reads comma-separated numeric rows, one point per row. Blank lines and
/// lines starting with '#' are skipped. Every row must have the same
/// number of columns.
PointSet read_csv(std::istream& in, const CsvOptions& opts = {});
PointSet read_csv_file(const std::string& path, const CsvOptions& opts = {});

/// In-place Fisher-Yates shuffle of the rows.
void shuffle_points(PointSet& points, std::uint64_t seed);

struct MixtureConfig {
  std::size_t k_true = 10;
  std::size_t n = 10000;
  std::size_t dim = 2;
  /// Per-coordinate standard deviation of each cluster.
  double spread = 1.0;
  /// Centers are drawn uniformly from [0, box]^dim.
  double box = 100.0;
  std::uint64_t seed = 0;
};

struct GeneratedData {
  PointSet points;
  /// True cluster centers; for drifting data, their final positions.
  std::vector<std::vector<double>> centers;
  /// Index of the generating cluster of each point.
  std::vector<std::size_t> labels;
};

/// Isotropic Gaussian clusters around fixed random centers. Every cluster
/// gets at least one point (when n >= k_true), the rest are assigned
/// uniformly, and the stream order is shuffled.
GeneratedData gen_gaussian_mixture(const MixtureConfig& cfg);

struct DriftConfig {
  std::size_t centers = 20;
  std::size_t points_per_step = 100;
  std::size_t dim = 2;
  /// Displacement applied to every center at the start of each step; empty
  /// means no drift. Must have `dim` entries otherwise.
  std::vector<double> drift;
  double stddev = 1.0;
  double box = 100.0;
  std::size_t total = 20000;
  std::uint64_t seed = 0;
};

/// Drifting Gaussian clusters: every step moves each center by `drift`
/// and then emits points_per_step points around it. Points within a step
/// are shuffled. The stream stops after `total` points.
GeneratedData gen_drift(const DriftConfig& cfg);

}  // namespace streamcc
