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
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "streamcc/benchmark.h"
#include "streamcc/dataset.h"
#include "streamcc/schedule.h"
#include "test_support.h"

using namespace streamcc;
using namespace streamcc::testing;

namespace {

PointSet mixture(std::size_t n, std::size_t dim, std::uint64_t seed) {
  MixtureConfig c;
  c.k_true = 5;
  c.n = n;
  c.dim = dim;
  c.seed = seed;
  return gen_gaussian_mixture(c).points;
}

BenchConfig small_config() {
  BenchConfig c;
  c.k = 5;
  c.m = 40;
  c.timing = false;
  return c;
}

}  // namespace

TEST_CASE("algorithm names") {
  for (Algo a : {Algo::kSeq, Algo::kCt, Algo::kCc, Algo::kRcc, Algo::kOnline}) {
    CHECK(parse_algo(to_string(a)) == a);
  }
  CHECK_THROWS_AS(parse_algo("streamkm"), std::invalid_argument);
}

TEST_CASE("config validation and defaults") {
  BenchConfig c;
  CHECK(c.bucket_size() == 200);
  CHECK(c.warmup_size() == 20);
  CHECK_NOTHROW(c.validate());
  c.alpha = 1.0;
  CHECK_THROWS(c.validate());
  c = BenchConfig{};
  c.r = 1;
  CHECK_THROWS(c.validate());
  c = BenchConfig{};
  c.m = 5;
  CHECK_THROWS(c.validate());
}

TEST_CASE("memory estimate") {
  CHECK(memory_bytes(0, 5) == 0);
  CHECK(memory_bytes(10, 5) == 400);
}

TEST_CASE("sequential memory is k * d * 8 throughout") {
  const PointSet data = mixture(2000, 3, 1);
  const auto q = schedule_queries(QuerySchedule::fixed(100), data.size());
  const RunMetrics r = run_benchmark(Algo::kSeq, data, q, small_config(), 1);
  REQUIRE(r.queries.size() == 20);
  for (const QueryRecord& rec : r.queries) CHECK(rec.mem_bytes == 5 * 3 * 8);
  CHECK(r.peak_mem_bytes == 5 * 3 * 8);
}

TEST_CASE("reported SSQ equals an independent prefix recomputation") {
  const PointSet data = mixture(1500, 2, 2);
  const auto q = schedule_queries(QuerySchedule::fixed(250), data.size());
  for (Algo a : {Algo::kSeq, Algo::kCt, Algo::kCc, Algo::kRcc, Algo::kOnline}) {
    CAPTURE(to_string(a));
    const BenchConfig cfg = small_config();
    const RunMetrics r = run_benchmark(a, data, q, cfg, 3);
    // Replay the same algorithm and recompute cost at each query.
    auto impl = make_algorithm(a, cfg, 3);
    std::size_t next = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      impl->push(data.point(i));
      if (next < q.size() && q[next] == i + 1) {
        const CenterSet c = impl->query();
        double cost = 0.0;
        for (std::size_t j = 0; j <= i; ++j) {
          double best = 1e300;
          for (std::size_t t = 0; t < c.size(); ++t) best = std::min(best, oracle_dist2(data.point(j), c.center(t)));
          cost += best;
        }
        CHECK(r.queries[next].ssq == doctest::Approx(cost).epsilon(1e-9));
        CHECK(std::isfinite(r.queries[next].ssq));
        CHECK(r.queries[next].ssq > 0.0);
        ++next;
      }
    }
    CHECK(next == q.size());
  }
}

TEST_CASE("timing off reports zero durations") {
  const PointSet data = mixture(600, 2, 3);
  const auto q = schedule_queries(QuerySchedule::fixed(200), data.size());
  const RunMetrics r = run_benchmark(Algo::kCc, data, q, small_config(), 4);
  CHECK(r.update_ns_total == 0);
  for (const QueryRecord& rec : r.queries) {
    CHECK(rec.query_ns == 0);
    CHECK(rec.update_ns_cum == 0);
  }
}

TEST_CASE("exact SSQ can be disabled") {
  BenchConfig cfg = small_config();
  cfg.exact_ssq = false;
  const PointSet data = mixture(300, 2, 3);
  const std::vector<std::uint64_t> q{300};
  CHECK(std::isnan(run_benchmark(Algo::kCt, data, q, cfg, 1).queries[0].ssq));
}

TEST_CASE("tree storage grows by at most one point per push") {
  const PointSet data = mixture(4000, 2, 5);
  auto impl = make_algorithm(Algo::kCt, small_config(), 2);
  std::size_t last = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    impl->push(data.point(i));
    const std::size_t now = impl->stored_points();
    CHECK(now <= last + 1);
    last = now;
  }
}

TEST_CASE("csv output") {
  CHECK(kCsvHeader == "algo,seed,point_index,ssq,query_ns,update_ns_cum,mem_bytes");
  RunMetrics r;
  r.algo = Algo::kRcc;
  r.seed = 7;
  QueryRecord q;
  q.point_index = 100;
  q.ssq = 0.1;
  q.query_ns = 5;
  q.update_ns_cum = 9;
  q.mem_bytes = 80;
  r.queries.push_back(q);
  std::ostringstream out;
  write_csv_header(out);
  write_csv_rows(out, r);
  CHECK(out.str() == std::string(kCsvHeader) + "\nrcc,7,100,0.10000000000000001,5,9,80\n");
}

TEST_CASE("horizon-sized rcc degrees") {
  // 2^16 buckets: 2^8, 2^4, 2^2 for depth 3, innermost first.
  CHECK(rcc_degrees_for_horizon(1 << 16, 3) == std::vector<std::uint64_t>{4, 16, 256});
  CHECK(rcc_degrees_for_horizon(250, 1) == std::vector<std::uint64_t>{16});
  CHECK(rcc_degrees_for_horizon(2, 3) == std::vector<std::uint64_t>{2, 2, 2});
  CHECK_THROWS(rcc_degrees_for_horizon(0, 3));
  CHECK_THROWS(rcc_degrees_for_horizon(10, 0));
}

TEST_CASE("median") {
  CHECK(median({3, 1, 2}) == 2.0);
  CHECK(median({4, 1, 2, 3}) == 2.5);
  CHECK_THROWS(median({}));
}
