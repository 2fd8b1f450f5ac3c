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
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "streamcc/coreset_cache.h"
#include "streamcc/radix.h"
#include "test_support.h"

using namespace streamcc;
using namespace streamcc::testing;

namespace {

constexpr std::size_t kM = 5;

Bucket base(std::uint64_t i, std::uint64_t seed = 3) {
  return random_base_bucket(i, kM, 2, seed);
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("r = 2, third query merges the cached prefix with one tree bucket") {
  CoresetCache cc(2, CoresetConfig{2, kM, 1});
  for (std::uint64_t n = 1; n <= 3; ++n) {
    cc.update(base(n));
    const Bucket b = cc.coreset();
    CHECK(b.span_left == 1);
    CHECK(b.span_right == n);
  }
  const QueryStats& q = cc.last_query();
  CHECK(q.path == QueryPath::kCacheHit);
  CHECK(q.candidate_spans ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2}, {3, 3}});
  CHECK(cc.returned_level() == 2);
  CHECK(cc.cache_keys() == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("single-digit counts use one tree level and reset the cache") {
  CoresetCache cc(3, CoresetConfig{2, kM, 1});
  for (std::uint64_t n = 1; n <= 18; ++n) {
    cc.update(base(n));
    cc.coreset();
    if (radix::major(n, 3) == 0) {
      CHECK(cc.last_query().path == QueryPath::kTreeOnly);
      CHECK(cc.cache_keys() == std::vector<std::uint64_t>{n});
      CHECK(cc.returned_level() <= radix::ceil_log(n, 3));
    }
  }
}

TEST_CASE("merge degree 3 driven to 47 keeps keys {27, 45, 47}") {
  CoresetCache cc(3, CoresetConfig{2, kM, 8});
  for (std::uint64_t n = 1; n <= 47; ++n) {
    cc.update(base(n));
    cc.coreset();
  }
  CHECK(cc.cache_keys() == std::vector<std::uint64_t>{27, 45, 47});
}

TEST_CASE("update leaves the cache alone") {
  CoresetCache cc(2, CoresetConfig{2, kM, 1});
  cc.update(base(1));
  cc.update(base(2));
  cc.update(base(3));
  cc.coreset();
  const auto keys = cc.cache_keys();
  cc.update(base(4));
  CHECK(cc.cache_keys() == keys);
  CHECK(cc.bucket_count() == 4);
  CHECK(cc.tree().levels()[2].size() == 1);
}

TEST_CASE("repeated query returns the cached bucket") {
  CoresetCache cc(2, CoresetConfig{2, kM, 1});
  for (std::uint64_t n = 1; n <= 5; ++n) cc.update(base(n));
  const Bucket first = cc.coreset();
  const auto reductions = cc.query_reductions();
  const Bucket again = cc.coreset();
  CHECK(again == first);
  CHECK(cc.last_query().path == QueryPath::kCached);
  CHECK(cc.query_reductions() == reductions);
}

TEST_CASE("errors") {
  CoresetCache cc(2, CoresetConfig{2, kM, 1});
  CHECK_THROWS_AS(cc.coreset(), std::logic_error);
  CHECK_THROWS_AS(cc.returned_level(), std::logic_error);
  CHECK_FALSE(cc.has_answered());
}

TEST_CASE("query-every-bucket invariants") {
  for (std::uint64_t r : {2u, 3u, 5u}) {
    CAPTURE(r);
    CoresetCache cc(r, CoresetConfig{2, kM, r});
    double weight = 0.0;
    for (std::uint64_t n = 1; n <= 800; ++n) {
      CAPTURE(n);
      // Before bucket n arrives the cache must already hold prefixsum(n).
      const auto keys = cc.cache_keys();
      for (std::uint64_t p : radix::prefixsum(n, r)) {
        REQUIRE(std::binary_search(keys.begin(), keys.end(), p));
      }
      Bucket b = base(n, r);
      weight += b.total_weight();
      cc.update(std::move(b));
      const Bucket c = cc.coreset();
      const QueryStats& q = cc.last_query();
      REQUIRE(q.path != QueryPath::kFallback);
      REQUIRE(q.buckets_merged <= r);
      REQUIRE(c.span_left == 1);
      REQUIRE(c.span_right == n);
      REQUIRE(std::abs(c.total_weight() - weight) <= 1e-9 * weight);
      // Single-digit answers copy up to r - 1 tree buckets; merges reduce.
      REQUIRE(c.points.size() <= (q.path == QueryPath::kTreeOnly ? (r - 1) * kM : kM));

      const auto after = cc.cache_keys();
      auto allowed = radix::prefixsum(n, r);
      allowed.push_back(n);
      allowed = sorted(allowed);
      for (std::uint64_t k : after) {
        REQUIRE(std::binary_search(allowed.begin(), allowed.end(), k));
      }
      REQUIRE(after.size() <= radix::ceil_log(n, r) + 1);

      const std::uint32_t level = cc.returned_level();
      REQUIRE(level <= radix::ceil_log(n, r) + radix::nonzero_digits(n, r) - 1);
      if (n >= 2) {
        const double bound = std::ceil(2.0 * std::log(static_cast<double>(n)) /
                                       std::log(static_cast<double>(r)) - 1e-12) - 1.0;
        REQUIRE(static_cast<double>(level) <= bound);
      }
    }
  }
}

TEST_CASE("five-way merges at 368 stay within the level bound") {
  CoresetCache cc(5, CoresetConfig{2, kM, 5});
  for (std::uint64_t n = 1; n <= 368; ++n) {
    cc.update(base(n, 5));
    cc.coreset();
  }
  // 368 = 2*125 + 4*25 + 3*5 + 3.
  CHECK(cc.cache_keys() == std::vector<std::uint64_t>{250, 350, 365, 368});
  CHECK(cc.returned_level() <= 2 * radix::floor_log(368, 5));
}

TEST_CASE("without caching every query is the tree's bucket set") {
  CoresetCache cc(3, CoresetConfig{2, kM, 4}, /*caching=*/false);
  CoresetTree tree(3, CoresetConfig{2, kM, 4});
  for (std::uint64_t n = 1; n <= 60; ++n) {
    cc.update(base(n));
    tree.update(base(n));
    cc.coreset();
    const auto buckets = tree.coreset();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> want;
    for (const Bucket& b : buckets) want.emplace_back(b.span_left, b.span_right);
    const QueryStats& q = cc.last_query();
    if (radix::major(n, 3) != 0) CHECK(q.path == QueryPath::kFallback);
    CHECK(q.buckets_merged == buckets.size());
    auto got = q.candidate_spans;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(cc.cache_keys().empty());
  }
}

TEST_CASE("sparse queries fall back and then warm the cache") {
  CoresetCache cc(2, CoresetConfig{2, kM, 6});
  for (std::uint64_t n = 1; n <= 7; ++n) cc.update(base(n));
  cc.coreset();  // 7 = 4 + 2 + 1, nothing cached yet
  CHECK(cc.last_query().path == QueryPath::kFallback);
  CHECK(cc.last_query().buckets_merged == 3);
  CHECK(cc.cache_keys() == std::vector<std::uint64_t>{7});
  cc.update(base(8));
  cc.coreset();
  CHECK(cc.last_query().path == QueryPath::kTreeOnly);
  CHECK(cc.cache_keys() == std::vector<std::uint64_t>{8});
  for (std::uint64_t n = 9; n <= 10; ++n) cc.update(base(n));
  cc.coreset();  // 10 = 8 + 2: major 8 is cached
  CHECK(cc.last_query().path == QueryPath::kCacheHit);
  CHECK(cc.last_query().buckets_merged == 2);
}

TEST_CASE("cache state eviction") {
  CacheState s;
  for (std::uint64_t k : {1u, 2u, 4u, 6u, 7u}) {
    Bucket b = random_base_bucket(1, 1, 1, 0);
    b.span_right = k;
    s.insert(k, b);
  }
  s.evict(7, 2);  // prefixsum(7, 2) = {4, 6}
  CHECK(s.keys() == std::vector<std::uint64_t>{4, 6, 7});
  CHECK(s.stored_points() == 3);
}
