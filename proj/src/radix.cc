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
#include "streamcc/radix.h"

#include <stdexcept>

namespace streamcc::radix {

namespace {

void validate(std::uint64_t n, std::uint64_t r) {
  if (n == 0) throw std::invalid_argument("radix: n must be >= 1");
  if (r < 2) throw std::invalid_argument("radix: r must be >= 2");
}

}  // namespace

std::vector<Term> decompose(std::uint64_t n, std::uint64_t r) {
  validate(n, r);
  std::vector<Term> terms;
  std::uint64_t place = 1;
  for (std::uint32_t e = 0; n > 0; ++e) {
    const std::uint64_t digit = n % r;
    if (digit != 0) terms.push_back({digit, e, digit * place});
    n /= r;
    if (n > 0) place *= r;
  }
  return terms;
}

std::uint64_t minor(std::uint64_t n, std::uint64_t r) {
  validate(n, r);
  std::uint64_t place = 1;
  while (n % r == 0) {
    n /= r;
    place *= r;
  }
  return (n % r) * place;
}

std::uint64_t major(std::uint64_t n, std::uint64_t r) { return n - minor(n, r); }

std::vector<std::uint64_t> prefixsum(std::uint64_t n, std::uint64_t r) {
  std::vector<std::uint64_t> out;
  std::uint64_t rest = major(n, r);
  while (rest != 0) {
    out.push_back(rest);
    rest = major(rest, r);
  }
  // Built largest-first (dropping one more term each step).
  return {out.rbegin(), out.rend()};
}

std::vector<std::uint64_t> partsum(std::uint64_t n) { return prefixsum(n, 2); }

std::uint32_t nonzero_digits(std::uint64_t n, std::uint64_t r) {
  return static_cast<std::uint32_t>(decompose(n, r).size());
}

std::uint32_t ceil_log(std::uint64_t n, std::uint64_t r) {
  validate(n, r);
  std::uint32_t e = 0;
  std::uint64_t p = 1;
  while (p < n) {
    p *= r;
    ++e;
  }
  return e;
}

std::uint32_t floor_log(std::uint64_t n, std::uint64_t r) {
  validate(n, r);
  std::uint32_t e = 0;
  while (n >= r) {
    n /= r;
    ++e;
  }
  return e;
}

}  // namespace streamcc::radix
