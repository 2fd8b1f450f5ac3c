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
#include "streamcc/dataset.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "streamcc/random.h"

namespace streamcc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_field(std::string_view field, std::size_t line, std::size_t col) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
    throw CsvError(line, "column " + std::to_string(col) + ": '" +
                             std::string(field) + "' is not a number");
  }
  if (!std::isfinite(v)) {
    throw CsvError(line, "column " + std::to_string(col) + " is not finite");
  }
  return v;
}

}  // namespace

PointSet read_csv(std::istream& in, const CsvOptions& opts) {
  PointSet out;
  std::string raw;
  std::vector<double> row;
  std::size_t line = 0;
  bool header_pending = opts.header;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    row.clear();
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = text.find(',', start);
      const std::string_view field =
          text.substr(start, comma == std::string_view::npos ? text.npos
                                                             : comma - start);
      row.push_back(parse_field(field, line, row.size() + 1));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!out.empty() && row.size() != out.dim()) {
      throw CsvError(line, "expected " + std::to_string(out.dim()) +
                               " columns, found " + std::to_string(row.size()));
    }
    out.push_back(row);
  }
  if (opts.shuffle_seed) shuffle_points(out, *opts.shuffle_seed);
  return out;
}

PointSet read_csv_file(const std::string& path, const CsvOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_csv(in, opts);
}

void shuffle_points(PointSet& points, std::uint64_t seed) {
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng.below(i)]);
  }
  PointSet shuffled(points.dim());
  shuffled.reserve(n);
  for (std::size_t i : order) shuffled.push_back(points.point(i), points.weight(i));
  points = std::move(shuffled);
}

namespace {

std::vector<std::vector<double>> random_centers(std::size_t count,
                                                std::size_t dim, double box,
                                                Rng& rng) {
  std::vector<std::vector<double>> centers(count, std::vector<double>(dim));
  for (auto& c : centers) {
    for (double& x : c) x = rng.uniform() * box;
  }
  return centers;
}

void emit(GeneratedData& out, const std::vector<double>& center,
          std::size_t label, double spread, Rng& rng,
          std::vector<double>& scratch) {
  for (std::size_t t = 0; t < center.size(); ++t) {
    scratch[t] = center[t] + spread * rng.normal();
  }
  out.points.push_back(scratch);
  out.labels.push_back(label);
}

}  // namespace

GeneratedData gen_gaussian_mixture(const MixtureConfig& cfg) {
  if (cfg.k_true == 0) throw std::invalid_argument("k_true must be >= 1");
  if (cfg.dim == 0) throw std::invalid_argument("dimension must be >= 1");
  if (cfg.spread < 0.0) throw std::invalid_argument("spread must be >= 0");
  Rng rng(cfg.seed);
  GeneratedData out;
  out.centers = random_centers(cfg.k_true, cfg.dim, cfg.box, rng);
  out.points = PointSet(cfg.dim);
  out.points.reserve(cfg.n);
  std::vector<double> scratch(cfg.dim);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const std::size_t label = i < cfg.k_true ? i : rng.below(cfg.k_true);
    emit(out, out.centers[label], label, cfg.spread, rng, scratch);
  }
  // Shuffle so the clusters seen first are random.
  const std::size_t n = out.labels.size();
  PointSet shuffled(cfg.dim);
  shuffled.reserve(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    shuffled.push_back(out.points.point(order[i]));
    labels[i] = out.labels[order[i]];
  }
  out.points = std::move(shuffled);
  out.labels = std::move(labels);
  return out;
}

GeneratedData gen_drift(const DriftConfig& cfg) {
  if (cfg.centers == 0 || cfg.points_per_step == 0 || cfg.dim == 0) {
    throw std::invalid_argument("drift generator counts must be positive");
  }
  if (!cfg.drift.empty() && cfg.drift.size() != cfg.dim) {
    throw std::invalid_argument("drift vector must have one entry per dimension");
  }
  Rng rng(cfg.seed);
  GeneratedData out;
  out.centers = random_centers(cfg.centers, cfg.dim, cfg.box, rng);
  out.points = PointSet(cfg.dim);
  out.points.reserve(cfg.total);
  std::vector<double> scratch(cfg.dim);
  std::vector<std::size_t> step_labels;
  while (out.points.size() < cfg.total) {
    for (auto& c : out.centers) {
      for (std::size_t t = 0; t < cfg.drift.size(); ++t) c[t] += cfg.drift[t];
    }
    step_labels.clear();
    for (std::size_t j = 0; j < cfg.centers; ++j) {
      step_labels.insert(step_labels.end(), cfg.points_per_step, j);
    }
    for (std::size_t i = step_labels.size(); i > 1; --i) {
      std::swap(step_labels[i - 1], step_labels[rng.below(i)]);
    }
    for (std::size_t label : step_labels) {
      if (out.points.size() == cfg.total) break;
      emit(out, out.centers[label], label, cfg.stddev, rng, scratch);
    }
  }
  return out;
}

}  // namespace streamcc
