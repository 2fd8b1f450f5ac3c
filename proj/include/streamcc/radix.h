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

// Base-r digit arithmetic behind the coreset cache.
//
// Write n = sum_i beta_i * r^alpha_i with 0 < beta_i < r and alpha strictly
// increasing. minor(n, r) is the lowest term, major(n, r) the rest, and
// prefixsum(n, r) the set of values obtained by dropping the kappa lowest
// nonzero terms for kappa = 1 .. (terms - 1). Those are exactly the bucket
// counts whose [1, u] summaries a cache must keep to serve later queries.

#include <cstdint>
#include <vector>

namespace streamcc::radix {

struct Term {
  std::uint64_t digit;     // beta, in [1, r)
  std::uint32_t exponent;  // alpha
  std::uint64_t value;     // beta * r^alpha
};

/// Nonzero terms of n in base r, lowest exponent first.
std::vector<Term> decompose(std::uint64_t n, std::uint64_t r);

std::uint64_t minor(std::uint64_t n, std::uint64_t r);
std::uint64_t major(std::uint64_t n, std::uint64_t r);

/// Ascending. Empty when n has a single nonzero digit.
std::vector<std::uint64_t> prefixsum(std::uint64_t n, std::uint64_t r);

/// prefixsum(n, 2).
std::vector<std::uint64_t> partsum(std::uint64_t n);

/// Number of nonzero base-r digits.
std::uint32_t nonzero_digits(std::uint64_t n, std::uint64_t r);

/// Smallest e with r^e >= n, i.e. ceil(log_r n); 0 for n = 1.
std::uint32_t ceil_log(std::uint64_t n, std::uint64_t r);

/// Largest e with r^e <= n, i.e. floor(log_r n).
std::uint32_t floor_log(std::uint64_t n, std::uint64_t r);

}  // namespace streamcc::radix
