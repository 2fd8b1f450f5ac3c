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
#include "streamcc/benchmark.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>

#include "streamcc/driver.h"
#include "streamcc/online_cc.h"

namespace streamcc {

Algo parse_algo(std::string_view name) {
  if (name == "seq") return Algo::kSeq;
  if (name == "ct") return Algo::kCt;
  if (name == "cc") return Algo::kCc;
  if (name == "rcc") return Algo::kRcc;
  if (name == "online") return Algo::kOnline;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected seq, ct, cc, rcc or online)");
}

const char* to_string(Algo a) {
  switch (a) {
    case Algo::kSeq:
      return "seq";
    case Algo::kCt:
      return "ct";
    case Algo::kCc:
      return "cc";
    case Algo::kRcc:
      return "rcc";
    case Algo::kOnline:
      return "online";
  }
  return "?";
}

void BenchConfig::validate() const {
  CoresetConfig{k, bucket_size(), 0}.validate();
  if (r < 2) throw std::invalid_argument("merge degree r must be >= 2");
  if (best_of == 0) throw std::invalid_argument("best-of runs must be >= 1");
  if (warmup_size() < k) throw std::invalid_argument("warmup must be >= k");
  for (std::uint64_t d : rcc_degrees) {
    if (d < 2) throw std::invalid_argument("rcc merge degrees must be >= 2");
  }
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
}

namespace {

class SequentialAlgorithm final : public StreamAlgorithm {
 public:
  explicit SequentialAlgorithm(std::size_t k) : seq_(k) {}
  void push(std::span<const double> p) override { seq_.update(p); }
  CenterSet query() override { return seq_.centers(); }
  std::size_t stored_points() const override { return seq_.k(); }

 private:
  SequentialKMeans seq_;
};

class DriverAlgorithm final : public StreamAlgorithm {
 public:
  explicit DriverAlgorithm(DriverConfig cfg) : driver_(std::move(cfg)) {}
  void push(std::span<const double> p) override { driver_.push(p); }
  CenterSet query() override { return driver_.query(); }
  std::size_t stored_points() const override { return driver_.stored_points(); }
  std::size_t last_query_buckets_merged() const override {
    return driver_.last_query_buckets_merged();
  }

 private:
  StreamClusterer driver_;
};

// Buffers the warmup points, then hands over to OnlineCC.
class OnlineAlgorithm final : public StreamAlgorithm {
 public:
  OnlineAlgorithm(OnlineConfig cfg, std::size_t warmup)
      : cfg_(cfg), warmup_(warmup) {}

  void push(std::span<const double> p) override {
    if (online_) {
      online_->update(p);
      return;
    }
    if (buffer_.empty()) buffer_ = PointSet(p.size());
    buffer_.push_back(p);
    if (buffer_.size() == warmup_) {
      online_.emplace(cfg_, buffer_);
      buffer_ = PointSet();
    }
  }

  CenterSet query() override {
    fell_back_ = false;
    if (online_) {
      const CenterSet& c = online_->query();
      fell_back_ = online_->last_query_fell_back();
      return c;
    }
    if (buffer_.empty()) throw std::logic_error("query before any point");
    return best_of_runs(buffer_, cfg_.coreset.k, cfg_.runs, cfg_.lloyd_iters,
                        derive_seed(cfg_.coreset.seed, {0x3a3aULL, buffer_.size()}));
  }

  std::size_t stored_points() const override {
    return online_ ? online_->stored_points() : buffer_.size();
  }
  std::size_t last_query_buckets_merged() const override {
    return fell_back_ ? online_->cache().last_query().buckets_merged : 0;
  }
  bool last_query_fell_back() const override { return fell_back_; }

 private:
  OnlineConfig cfg_;
  std::size_t warmup_;
  PointSet buffer_;
  std::optional<OnlineCC> online_;
  bool fell_back_ = false;
};

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}

double prefix_cost(const PointSet& data, std::size_t count,
                   const CenterSet& centers) {
  CompensatedSum total;
  for (std::size_t i = 0; i < count; ++i) {
    total.add(data.weight(i) * nearest_center(centers, data.point(i)).distance2);
  }
  return total.value();
}

}  // namespace

std::unique_ptr<StreamAlgorithm> make_algorithm(Algo algo,
                                                const BenchConfig& cfg,
                                                std::uint64_t seed) {
  cfg.validate();
  const CoresetConfig coreset{cfg.k, cfg.bucket_size(), seed};
  switch (algo) {
    case Algo::kSeq:
      return std::make_unique<SequentialAlgorithm>(cfg.k);
    case Algo::kCt:
    case Algo::kCc:
    case Algo::kRcc: {
      DriverConfig d;
      d.coreset = coreset;
      d.kind = algo == Algo::kCt   ? StructureKind::kTree
               : algo == Algo::kCc ? StructureKind::kCache
                                   : StructureKind::kRecursive;
      d.r = cfg.r;
      d.rcc_degrees = cfg.rcc_degrees;
      d.runs = cfg.best_of;
      d.lloyd_iters = cfg.lloyd_iters;
      return std::make_unique<DriverAlgorithm>(std::move(d));
    }
    case Algo::kOnline: {
      OnlineConfig o;
      o.coreset = coreset;
      o.r = cfg.r;
      o.alpha = cfg.alpha;
      o.eps = cfg.eps;
      o.runs = cfg.best_of;
      o.lloyd_iters = cfg.lloyd_iters;
      return std::make_unique<OnlineAlgorithm>(o, cfg.warmup_size());
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

RunMetrics run_benchmark(Algo algo, const PointSet& data,
                         std::span<const std::uint64_t> query_points,
                         const BenchConfig& cfg, std::uint64_t seed) {
  if (!std::is_sorted(query_points.begin(), query_points.end())) {
    throw std::invalid_argument("query points must be ascending");
  }
  auto impl = make_algorithm(algo, cfg, seed);
  RunMetrics out;
  out.algo = algo;
  out.seed = seed;
  out.queries.reserve(query_points.size());

  auto note_memory = [&]() {
    out.peak_stored_points = std::max(out.peak_stored_points, impl->stored_points());
  };

  std::size_t next = 0;
  while (next < query_points.size() && query_points[next] == 0) ++next;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto t0 = cfg.timing ? Clock::now() : Clock::time_point{};
    impl->push(data.point(i));
    if (cfg.timing) out.update_ns_total += elapsed_ns(t0, Clock::now());
    note_memory();

    const std::uint64_t seen = i + 1;
    while (next < query_points.size() && query_points[next] == seen) {
      QueryRecord rec;
      rec.point_index = seen;
      const auto q0 = cfg.timing ? Clock::now() : Clock::time_point{};
      const CenterSet centers = impl->query();
      if (cfg.timing) rec.query_ns = elapsed_ns(q0, Clock::now());
      rec.update_ns_cum = out.update_ns_total;
      rec.buckets_merged = impl->last_query_buckets_merged();
      rec.fell_back = impl->last_query_fell_back();
      note_memory();
      rec.mem_bytes = memory_bytes(impl->stored_points(), data.dim());
      rec.ssq = cfg.exact_ssq ? prefix_cost(data, seen, centers)
                              : std::numeric_limits<double>::quiet_NaN();
      out.queries.push_back(rec);
      ++next;
    }
  }
  out.peak_mem_bytes = memory_bytes(out.peak_stored_points, data.dim());
  return out;
}

std::vector<std::uint64_t> rcc_degrees_for_horizon(std::uint64_t horizon,
                                                   std::uint32_t depth) {
  if (depth == 0) throw std::invalid_argument("rcc depth must be >= 1");
  if (horizon == 0) throw std::invalid_argument("rcc horizon must be >= 1");
  std::vector<std::uint64_t> degrees(depth);
  const double log2_horizon = std::log2(static_cast<double>(horizon));
  for (std::uint32_t order = 0; order < depth; ++order) {
    // The outermost order (depth - 1) gets exponent 1/2, the next 1/4, ...
    const double exponent = std::ldexp(1.0, -static_cast<int>(depth - order));
    const double bits = std::max(1.0, std::round(log2_horizon * exponent));
    degrees[order] = std::uint64_t{1} << static_cast<unsigned>(std::min(bits, 32.0));
  }
  return degrees;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_rows(std::ostream& out, const RunMetrics& run) {
  char ssq[64];
  for (const QueryRecord& q : run.queries) {
    std::snprintf(ssq, sizeof ssq, "%.17g", q.ssq);
    out << to_string(run.algo) << ',' << run.seed << ',' << q.point_index << ','
        << ssq << ',' << q.query_ns << ',' << q.update_ns_cum << ','
        << q.mem_bytes << '\n';
  }
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of no values");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace streamcc
