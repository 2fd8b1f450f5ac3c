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
#include "streamcc/kmeans.h"
#include "test_support.h"

using namespace streamcc;
using namespace streamcc::testing;

namespace {

// Ten points near (0,0) and ten near (100,0).
PointSet two_tight_clusters(std::uint64_t seed) {
  return blobs({{0.0, 0.0}, {100.0, 0.0}}, 10, 0.5, seed);
}

PointSet random_small_instance(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  PointSet p(2);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> x{10.0 * rng.uniform(), 10.0 * rng.uniform()};
    p.push_back(x, 1.0 + std::floor(3.0 * rng.uniform()));
  }
  return p;
}

}  // namespace

TEST_CASE("squared_distance") {
  const std::vector<double> o{0, 0}, a{3, 4}, x{1, 1, 1}, y{2, 3, 5};
  CHECK(squared_distance(o, o) == 0.0);
  CHECK(squared_distance(o, a) == 25.0);
  CHECK(squared_distance(x, y) == 21.0);
  CHECK(squared_distance(y, x) == 21.0);
  CHECK_THROWS_AS(squared_distance(o, x), std::invalid_argument);
}

TEST_CASE("clustering_cost on hand examples") {
  CHECK(clustering_cost(points({{5, 5}}, {3}), centers({{5, 5}})) == 0.0);
  CHECK(clustering_cost(points({{0, 0}, {2, 0}}), centers({{0, 0}, {2, 0}})) == 0.0);
  CHECK(clustering_cost(points({{0, 0}, {4, 0}}, {2, 1}), centers({{1, 0}})) == 11.0);
  CHECK(clustering_cost(PointSet(2), centers({{1, 0}})) == 0.0);
  CHECK_THROWS(clustering_cost(points({{0, 0}}), CenterSet(2)));
}

TEST_CASE("nearest center ties go to the lowest index") {
  const CenterSet c = centers({{1, 0}, {-1, 0}, {0, 5}});
  const std::vector<double> x{0, 0};
  CHECK(nearest_center(c, x).index == 0);
  CHECK(nearest_center(c, x).distance2 == 1.0);
}

TEST_CASE("clustering_cost properties") {
  const PointSet p = random_small_instance(7, 30);
  CenterSet c = centers({{1, 1}, {5, 5}, {9, 2}});
  const double base = clustering_cost(p, c);

  SUBCASE("permuting centers and points leaves cost unchanged") {
    CHECK(clustering_cost(p, centers({{9, 2}, {1, 1}, {5, 5}})) ==
          doctest::Approx(base).epsilon(1e-12));
    PointSet shuffled(2);
    for (std::size_t i = p.size(); i-- > 0;) shuffled.push_back(p.point(i), p.weight(i));
    CHECK(clustering_cost(shuffled, c) == doctest::Approx(base).epsilon(1e-12));
  }
  SUBCASE("adding a point never lowers cost") {
    PointSet more = p;
    more.push_back(std::vector<double>{3.3, 7.7}, 2.0);
    CHECK(clustering_cost(more, c) >= base);
  }
  SUBCASE("scaling weights scales cost") {
    PointSet scaled = p;
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled.set_weight(i, 2.5 * p.weight(i));
    CHECK(clustering_cost(scaled, c) == doctest::Approx(2.5 * base).epsilon(1e-12));
  }
  SUBCASE("matches a direct evaluation") {
    double expect = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      double best = 1e300;
      for (std::size_t j = 0; j < c.size(); ++j) best = std::min(best, oracle_dist2(p.point(i), c.center(j)));
      expect += p.weight(i) * best;
    }
    CHECK(base == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("kmeans_pp small inputs") {
  Rng rng(1);
  const PointSet one = points({{2, 3}});
  const CenterSet c1 = kmeans_pp(one, 1, rng);
  REQUIRE(c1.size() == 1);
  CHECK(clustering_cost(one, c1) == 0.0);

  const PointSet three = points({{0, 0}, {1, 0}, {5, 5}});
  const CenterSet c3 = kmeans_pp(three, 3, rng);
  CHECK(c3.size() == 3);
  CHECK(clustering_cost(three, c3) == 0.0);

  // Two distinct points and k = 4: only the distinct points come back.
  const PointSet dup = points({{0, 0}, {0, 0}, {1, 1}});
  const CenterSet cd = kmeans_pp(dup, 4, rng);
  CHECK(cd.size() == 2);
  CHECK(clustering_cost(dup, cd) == 0.0);
  CHECK(cd.weight(0) + cd.weight(1) == 3.0);

  CHECK_THROWS_AS(kmeans_pp(one, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(kmeans_pp(PointSet(2), 1, rng), std::invalid_argument);
}

TEST_CASE("kmeans_pp returns input points weighted by assigned mass") {
  const PointSet p = random_small_instance(3, 40);
  Rng rng(5);
  const CenterSet c = kmeans_pp(p, 4, rng);
  REQUIRE(c.size() == 4);
  double mass = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      found = found || oracle_dist2(c.center(j), p.point(i)) == 0.0;
    }
    CHECK(found);
    mass += c.weight(j);
  }
  CHECK(mass == doctest::Approx(p.total_weight()));
}

TEST_CASE("kmeans_pp sampling matches the exact expected cost") {
  // Compact instance: no rare pick dominates the expectation.
  const PointSet p = points({{0, 0}, {1, 0}, {3, 0}, {4, 2}, {6, 1}}, {1, 2, 1, 1, 3});
  const double expect = expected_kmeanspp_cost_k2(p);
  double total = 0.0;
  const int trials = 100000;
  for (int s = 0; s < trials; ++s) {
    Rng rng(derive_seed(98, {static_cast<std::uint64_t>(s)}));
    total += clustering_cost(p, kmeans_pp(p, 2, rng));
  }
  CHECK(total / trials == doctest::Approx(expect).epsilon(0.03));
}

TEST_CASE("kmeans_pp on two tight clusters stays within the expected-cost bound") {
  const PointSet p = two_tight_clusters(11);
  const double opt = exact_kmeans_cost(p, 2);
  const double bound = 8.0 * (std::log(2.0) + 2.0) * opt;
  double total = 0.0;
  for (int s = 0; s < 200; ++s) {
    Rng rng(derive_seed(99, {static_cast<std::uint64_t>(s)}));
    total += clustering_cost(p, kmeans_pp(p, 2, rng));
  }
  CHECK(total / 200 <= bound);
  CHECK(expected_kmeanspp_cost_k2(p) <= bound);
}

TEST_CASE("kmeans_pp first pick follows weights") {
  // Weight 9 vs 1: the first center lands on the heavy point ~90% of the time.
  const PointSet p = points({{0, 0}, {10, 0}}, {9, 1});
  int heavy = 0;
  for (int s = 0; s < 2000; ++s) {
    Rng rng(s);
    const CenterSet c = kmeans_pp(p, 1, rng);
    heavy += c.center(0)[0] == 0.0;
  }
  CHECK(heavy / 2000.0 == doctest::Approx(0.9).epsilon(0.05));
}

TEST_CASE("lloyd_refine") {
  SUBCASE("centroid fixed point") {
    const PointSet p = points({{0, 0}, {2, 0}, {10, 0}, {12, 0}});
    const LloydResult r = lloyd_refine(p, centers({{1, 0}, {11, 0}}), 10);
    CHECK(r.iterations <= 1);
    CHECK(r.centers.center(0)[0] == 1.0);
    CHECK(r.centers.center(1)[0] == 11.0);
    CHECK(r.cost == 4.0);
  }
  SUBCASE("k = 1 converges to the centroid") {
    const LloydResult r = lloyd_refine(points({{0, 0}, {2, 0}}), centers({{0.5, 0}}), 10);
    CHECK(r.centers.center(0)[0] == 1.0);
    CHECK(r.centers.center(0)[1] == 0.0);
    CHECK(r.cost == 2.0);
  }
  SUBCASE("empty cluster keeps its center") {
    const LloydResult r = lloyd_refine(points({{0, 0}, {1, 0}}), centers({{0, 0}, {50, 50}}), 5);
    CHECK(r.centers.center(1)[0] == 50.0);
    CHECK(r.centers.center(1)[1] == 50.0);
    CHECK(r.centers.weight(1) == 0.0);
  }
  SUBCASE("cost never increases") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const PointSet p = random_small_instance(s, 60);
      Rng rng(s + 100);
      const LloydResult r = lloyd_refine(p, kmeans_pp(p, 5, rng), 50);
      REQUIRE(r.cost_history.size() == r.iterations + 1);
      for (std::size_t i = 1; i < r.cost_history.size(); ++i) {
        CHECK(r.cost_history[i] <= r.cost_history[i - 1] * (1 + 1e-12));
      }
      CHECK(r.cost == doctest::Approx(clustering_cost(p, r.centers)));
    }
  }
}

TEST_CASE("best_of_runs") {
  const PointSet p = two_tight_clusters(4);
  SUBCASE("one run is a single seeded kmeans_pp + lloyd") {
    Rng rng(derive_seed(17, {0}));
    const LloydResult single = lloyd_refine(p, kmeans_pp(p, 2, rng), 20);
    CHECK(best_of_runs(p, 2, 1, 20, 17) == single.centers);
  }
  SUBCASE("best of five is no worse than any run") {
    const double best = clustering_cost(p, best_of_runs(p, 2, 5, 20, 23));
    for (std::uint64_t run = 0; run < 5; ++run) {
      Rng rng(derive_seed(23, {run}));
      CHECK(best <= lloyd_refine(p, kmeans_pp(p, 2, rng), 20).cost);
    }
  }
  SUBCASE("reaches the brute-force optimum on two clusters") {
    const double opt = exact_kmeans_cost(p, 2);
    CHECK(clustering_cost(p, best_of_runs(p, 2, 5, 20, 31)) ==
          doctest::Approx(opt).epsilon(1e-9));
  }
}

TEST_CASE("sequential update") {
  CenterSet c = centers({{0, 0}});
  c.set_weight(0, 1);
  sequential_update(c, std::vector<double>{2, 0});
  CHECK(c.center(0)[0] == 1.0);
  CHECK(c.weight(0) == 2.0);

  CenterSet d = centers({{1, 0}});
  d.set_weight(0, 3);
  const Nearest before = sequential_update(d, std::vector<double>{5, 0});
  CHECK(before.distance2 == 16.0);
  CHECK(d.center(0)[0] == 2.0);
  CHECK(d.weight(0) == 4.0);

  CenterSet e = centers({{4, 4}});
  e.set_weight(0, 7);
  sequential_update(e, std::vector<double>{4, 4});
  CHECK(e.center(0)[0] == 4.0);
  CHECK(e.weight(0) == 8.0);

  CenterSet empty(2);
  CHECK_THROWS_AS(sequential_update(empty, std::vector<double>{0, 0}), std::logic_error);
}

TEST_CASE("SequentialKMeans initializes from the first k points") {
  SequentialKMeans seq(2);
  seq.update(std::vector<double>{0, 0});
  CHECK_FALSE(seq.initialized());
  seq.update(std::vector<double>{10, 0});
  CHECK(seq.initialized());
  seq.update(std::vector<double>{2, 0});
  CHECK(seq.centers().center(0)[0] == 1.0);
  CHECK(seq.centers().weight(0) == 2.0);
  CHECK(seq.centers().center(1)[0] == 10.0);
}
