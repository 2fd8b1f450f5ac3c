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

// streamcc: benchmark driver for the streaming k-means structures.
//
// Streams a CSV file or a synthetic dataset through one or more algorithms,
// fires queries on a fixed or Poisson schedule and writes
//   <out>/queries.csv   one row per query and run
//   <out>/summary.json  per-algorithm medians over the runs

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "streamcc/benchmark.h"
#include "streamcc/dataset.h"
#include "streamcc/random.h"
#include "streamcc/schedule.h"

namespace {

using nlohmann::json;
using namespace streamcc;

struct Options {
  std::vector<std::string> algos;
  std::string input;
  bool csv_header = false;
  std::optional<std::uint64_t> shuffle_seed;
  std::string gen;

  // generator parameters
  std::size_t gen_n = 50000;
  std::size_t gen_k = 10;
  std::size_t gen_dim = 5;
  double gen_spread = 1.0;
  double gen_box = 100.0;
  std::size_t drift_points_per_step = 100;
  double drift_speed = 0.1;

  std::size_t k = 10;
  std::size_t m = 0;
  std::uint64_t r = 2;
  std::uint32_t rcc_depth = 3;
  std::uint64_t rcc_horizon = 0;
  double alpha = 1.2;
  double eps = 0.1;
  std::size_t warmup = 0;
  std::uint64_t query_interval = 0;
  double poisson_rate = 0.0;
  std::size_t runs = 9;
  std::size_t best_of = 5;
  std::size_t lloyd_iters = 20;
  std::uint64_t seed = 1;
  std::string out = "streamcc-out";
  bool no_exact_ssq = false;
  std::string timing = "wall";
  bool batch = false;
};

PointSet load_data(const Options& o) {
  const std::uint64_t data_seed = derive_seed(o.seed, {0xda7aULL});
  if (!o.input.empty()) {
    CsvOptions csv;
    csv.header = o.csv_header;
    csv.shuffle_seed = o.shuffle_seed;
    return read_csv_file(o.input, csv);
  }
  if (o.gen == "mixture") {
    MixtureConfig c;
    c.k_true = o.gen_k;
    c.n = o.gen_n;
    c.dim = o.gen_dim;
    c.spread = o.gen_spread;
    c.box = o.gen_box;
    c.seed = data_seed;
    return gen_gaussian_mixture(c).points;
  }
  DriftConfig c;
  c.centers = o.gen_k;
  c.points_per_step = o.drift_points_per_step;
  c.dim = o.gen_dim;
  c.drift.assign(o.gen_dim, o.drift_speed / std::sqrt(static_cast<double>(o.gen_dim)));
  c.stddev = o.gen_spread;
  c.box = o.gen_box;
  c.total = o.gen_n;
  c.seed = data_seed;
  return gen_drift(c).points;
}

json summarize(const std::vector<RunMetrics>& runs, Algo algo) {
  std::vector<double> final_ssq, mean_ssq, update_ns, query_ns, peak_mem,
      fallbacks, max_merged;
  for (const RunMetrics& r : runs) {
    if (r.algo != algo) continue;
    update_ns.push_back(static_cast<double>(r.update_ns_total));
    peak_mem.push_back(static_cast<double>(r.peak_mem_bytes));
    double ssq_sum = 0.0, q_sum = 0.0, fb = 0.0, mm = 0.0;
    for (const QueryRecord& q : r.queries) {
      ssq_sum += q.ssq;
      q_sum += static_cast<double>(q.query_ns);
      fb += q.fell_back ? 1.0 : 0.0;
      mm = std::max(mm, static_cast<double>(q.buckets_merged));
    }
    const double nq = static_cast<double>(r.queries.size());
    if (!r.queries.empty()) {
      final_ssq.push_back(r.queries.back().ssq);
      mean_ssq.push_back(ssq_sum / nq);
      query_ns.push_back(q_sum / nq);
    }
    fallbacks.push_back(fb);
    max_merged.push_back(mm);
  }
  auto med = [](const std::vector<double>& v) -> json {
    if (v.empty()) return nullptr;
    const double m = median(v);
    return std::isfinite(m) ? json(m) : json(nullptr);
  };
  return json{{"runs", update_ns.size()},
              {"median_final_ssq", med(final_ssq)},
              {"median_mean_ssq", med(mean_ssq)},
              {"median_update_ns", med(update_ns)},
              {"median_mean_query_ns", med(query_ns)},
              {"median_peak_mem_bytes", med(peak_mem)},
              {"median_fallbacks", med(fallbacks)},
              {"median_max_buckets_merged", med(max_merged)}};
}

int run(const Options& o) {
  std::vector<Algo> algos;
  for (const std::string& a : o.algos) algos.push_back(parse_algo(a));
  if (o.input.empty() == o.gen.empty()) {
    throw std::invalid_argument("give exactly one of --input or --gen");
  }
  if ((o.query_interval > 0) == (o.poisson_rate > 0.0)) {
    throw std::invalid_argument(
        "give exactly one of --query-interval or --poisson-rate");
  }
  if (o.runs == 0) throw std::invalid_argument("--runs must be >= 1");
  if (o.timing != "wall" && o.timing != "off") {
    throw std::invalid_argument("--timing must be 'wall' or 'off'");
  }

  BenchConfig cfg;
  cfg.k = o.k;
  cfg.m = o.m;
  cfg.r = o.r;
  cfg.alpha = o.alpha;
  cfg.eps = o.eps;
  cfg.warmup = o.warmup;
  cfg.best_of = o.best_of;
  cfg.lloyd_iters = o.lloyd_iters;
  cfg.exact_ssq = !o.no_exact_ssq;
  cfg.timing = o.timing == "wall";
  cfg.validate();

  const PointSet data = load_data(o);
  if (data.empty()) throw std::invalid_argument("dataset is empty");

  const std::uint64_t horizon =
      o.rcc_horizon > 0 ? o.rcc_horizon
                        : std::max<std::uint64_t>(1, data.size() / cfg.bucket_size());
  cfg.rcc_degrees = rcc_degrees_for_horizon(horizon, o.rcc_depth);

  const QuerySchedule schedule =
      o.query_interval > 0
          ? QuerySchedule::fixed(o.query_interval)
          : QuerySchedule::poisson(o.poisson_rate, derive_seed(o.seed, {0x5c4eULL}));
  const std::vector<std::uint64_t> queries = schedule_queries(schedule, data.size());

  std::filesystem::create_directories(o.out);
  std::ofstream csv(std::filesystem::path(o.out) / "queries.csv");
  if (!csv) throw std::runtime_error("cannot write to " + o.out);
  write_csv_header(csv);

  std::vector<RunMetrics> all;
  for (Algo algo : algos) {
    for (std::size_t run = 0; run < o.runs; ++run) {
      const std::uint64_t seed = derive_seed(o.seed, {run});
      all.push_back(run_benchmark(algo, data, queries, cfg, seed));
      write_csv_rows(csv, all.back());
      std::cerr << to_string(algo) << " run " << run + 1 << "/" << o.runs
                << " done\n";
    }
  }

  json summary{{"points", data.size()},
               {"dim", data.dim()},
               {"k", cfg.k},
               {"m", cfg.bucket_size()},
               {"r", cfg.r},
               {"rcc_degrees", cfg.rcc_degrees},
               {"queries", queries.size()},
               {"runs", o.runs},
               {"algorithms", json::object()}};
  for (Algo algo : algos) summary["algorithms"][to_string(algo)] = summarize(all, algo);
  if (o.batch) {
    const CenterSet centers = best_of_runs(data, cfg.k, cfg.best_of, cfg.lloyd_iters,
                                           derive_seed(o.seed, {0xba7cULL}));
    summary["batch_ssq"] = clustering_cost(data, centers);
  }
  std::ofstream(std::filesystem::path(o.out) / "summary.json") << summary.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming k-means benchmark: coreset tree, coreset cache, "
               "recursive cache, online cache and sequential k-means."};
  Options o;

  app.add_option("--algo", o.algos, "Algorithms to run (seq, ct, cc, rcc, online)")
      ->required()
      ->delimiter(',');
  auto* input = app.add_option("--input", o.input, "Numeric CSV file, one point per row");
  app.add_flag("--csv-header", o.csv_header, "Skip the first CSV row");
  app.add_option("--shuffle-seed", o.shuffle_seed, "Shuffle CSV rows with this seed");
  auto* gen = app.add_option("--gen", o.gen, "Synthetic dataset")
                  ->check(CLI::IsMember({"mixture", "drift"}));
  input->excludes(gen);

  app.add_option("--gen-n", o.gen_n, "Synthetic: number of points");
  app.add_option("--gen-k", o.gen_k, "Synthetic: number of true clusters");
  app.add_option("--gen-dim", o.gen_dim, "Synthetic: dimension");
  app.add_option("--gen-spread", o.gen_spread, "Synthetic: per-cluster standard deviation");
  app.add_option("--gen-box", o.gen_box, "Synthetic: centers drawn from [0, box]^dim");
  app.add_option("--drift-points-per-step", o.drift_points_per_step,
                 "Drift: points per center per step");
  app.add_option("--drift-speed", o.drift_speed, "Drift: center displacement per step");

  app.add_option("--k", o.k, "Number of clusters");
  app.add_option("--m", o.m, "Bucket size (default 20k)");
  app.add_option("--r", o.r, "Merge degree for ct, cc and online");
  app.add_option("--rcc-depth", o.rcc_depth, "Nesting depth of rcc");
  app.add_option("--rcc-horizon", o.rcc_horizon,
                 "Expected base buckets used to size rcc degrees (default: stream length / m)");
  app.add_option("--alpha", o.alpha, "online fallback threshold");
  app.add_option("--eps", o.eps, "online coreset accuracy");
  app.add_option("--warmup", o.warmup, "online warmup points (default 2k)");
  auto* qi = app.add_option("--query-interval", o.query_interval, "Query every q points");
  auto* pr = app.add_option("--poisson-rate", o.poisson_rate,
                            "Poisson query rate per point (mean gap 1/rate)");
  qi->excludes(pr);
  app.add_option("--runs", o.runs, "Independent runs per algorithm");
  app.add_option("--best-of", o.best_of, "k-means++ trials per query");
  app.add_option("--lloyd-iters", o.lloyd_iters, "Lloyd iterations per trial");
  app.add_option("--seed", o.seed, "Base seed");
  app.add_option("--out", o.out, "Output directory");
  app.add_flag("--no-exact-ssq", o.no_exact_ssq, "Skip exact SSQ recomputation");
  app.add_option("--timing", o.timing, "wall or off (report zero durations)");
  app.add_flag("--batch", o.batch, "Also report batch best-of SSQ over the whole stream");

  CLI11_PARSE(app, argc, argv);
  try {
    return run(o);
  } catch (const std::exception& e) {
    std::cerr << "streamcc: " << e.what() << '\n';
    return 2;
  }
}
