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
#include "streamcc/schedule.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "streamcc/random.h"

namespace streamcc {

void QuerySchedule::validate() const {
  if (mode == Mode::kFixed && interval == 0) {
    throw std::invalid_argument("query interval must be >= 1");
  }
  if (mode == Mode::kPoisson && !(rate > 0.0 && std::isfinite(rate))) {
    throw std::invalid_argument("poisson rate must be > 0");
  }
}

std::vector<std::uint64_t> schedule_queries(const QuerySchedule& s,
                                            std::uint64_t n_points) {
  s.validate();
  std::vector<std::uint64_t> out;
  if (s.mode == QuerySchedule::Mode::kFixed) {
    for (std::uint64_t i = s.interval; i <= n_points; i += s.interval) {
      out.push_back(i);
    }
    return out;
  }

  Rng rng(s.seed);
  double t = 0.0;
  for (;;) {
    t += -std::log1p(-rng.uniform()) / s.rate;
    const double idx = std::ceil(t);
    if (idx > static_cast<double>(n_points)) break;
    const auto point = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(idx));
    if (out.empty() || out.back() != point) out.push_back(point);
  }
  return out;
}

}  // namespace streamcc
