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
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "streamcc/kmeans.h"
#include "streamcc/point_set.h"

namespace streamcc {

enum class Algo { kSeq, kCt, kCc, kRcc, kOnline };

/// Accepts seq, ct, cc, rcc, online. Throws std::invalid_argument otherwise.
Algo parse_algo(std::string_view name);
const char* to_string(Algo a);

struct BenchConfig {
  std::size_t k = 10;
  /// Bucket size; 0 selects 20k.
  std::size_t m = 0;
  std::uint64_t r = 2;
  /// Merge degree per order for rcc; empty selects the default order-3 table.
  std::vector<std::uint64_t> rcc_degrees;
  double alpha = 1.2;
  double eps = 0.1;
  /// Points used to seed online before it starts; 0 selects 2k.
  std::size_t warmup = 0;
  std::size_t best_of = 5;
  std::size_t lloyd_iters = 20;
  /// Recompute the exact SSQ over the whole prefix at each query.
  bool exact_ssq = true;
  /// Measure wall-clock time; when false every duration is reported as 0.
  bool timing = true;

  std::size_t bucket_size() const { return m == 0 ? 20 * k : m; }
  std::size_t warmup_size() const { return warmup == 0 ? 2 * k : warmup; }
  void validate() const;
};

/// Common face of the five benchmarked algorithms.
class StreamAlgorithm {
 public:
  virtual ~StreamAlgorithm() = default;
  virtual void push(std::span<const double> p) = 0;
  virtual CenterSet query() = 0;
  /// Points currently held (coreset points, buffers, centers).
  virtual std::size_t stored_points() const = 0;
  /// Buckets merged to assemble the last query's summary.
  virtual std::size_t last_query_buckets_merged() const { return 0; }
  /// True when the last query had to recompute centers from a summary.
  virtual bool last_query_fell_back() const { return false; }
};

std::unique_ptr<StreamAlgorithm> make_algorithm(Algo algo,
                                                const BenchConfig& cfg,
                                                std::uint64_t seed);

/// Eight bytes per coordinate.
inline std::uint64_t memory_bytes(std::size_t stored_points, std::size_t dim) {
  return static_cast<std::uint64_t>(stored_points) * dim * 8;
}

struct QueryRecord {
  std::uint64_t point_index = 0;
  /// NaN when exact SSQ is disabled.
  double ssq = 0.0;
  std::int64_t query_ns = 0;
  std::int64_t update_ns_cum = 0;
  std::uint64_t mem_bytes = 0;
  std::size_t buckets_merged = 0;
  bool fell_back = false;
};

struct RunMetrics {
  Algo algo = Algo::kCc;
  std::uint64_t seed = 0;
  std::vector<QueryRecord> queries;
  std::int64_t update_ns_total = 0;
  std::size_t peak_stored_points = 0;
  std::uint64_t peak_mem_bytes = 0;
};

/// Streams `data` into `algo`, querying after each count listed in
/// `query_points` (ascending). The SSQ of a query is the cost of the
/// returned centers over every point seen so far.
RunMetrics run_benchmark(Algo algo, const PointSet& data,
                         std::span<const std::uint64_t> query_points,
                         const BenchConfig& cfg, std::uint64_t seed);

/// Degrees for a recursive cache of the given depth sized for a stream of
/// about `horizon` base buckets: horizon^(1/2) at the outermost order, then
/// horizon^(1/4), ..., each rounded to the nearest power of two and at
/// least 2. Indexed by order, innermost first.
std::vector<std::uint64_t> rcc_degrees_for_horizon(std::uint64_t horizon,
                                                   std::uint32_t depth);

inline constexpr std::string_view kCsvHeader =
    "algo,seed,point_index,ssq,query_ns,update_ns_cum,mem_bytes";

void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, const RunMetrics& run);

/// Median of the values (mean of the middle pair for even counts). Throws
/// on empty input.
double median(std::vector<double> values);

}  // namespace streamcc
