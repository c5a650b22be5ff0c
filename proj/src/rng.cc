// Copyright 2026 The hstore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hstore/rng.h"

#include <cmath>
#include <stdexcept>

namespace hstore {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStreamMul = 0xD1B54A32D192ED03ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t derive_key(std::uint64_t key, std::uint64_t tag) { return mix64(mix64(key) ^ (tag * kStreamMul + kGolden)); }

CounterRng::CounterRng(std::uint64_t key, std::uint64_t stream)
    : base_(mix64(mix64(key + kGolden) ^ mix64(stream * kStreamMul + 1))) {}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  // Two finalizer rounds decorrelate neighbouring counters.
  return mix64(mix64(base_ + counter_ * kGolden) ^ base_);
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

int CounterRng::poisson(double mean) {
  if (!(mean >= 0) || !std::isfinite(mean)) throw std::invalid_argument("poisson: mean must be finite and >= 0");
  double u = uniform();
  if (mean == 0) return 0;
  double p = std::exp(-mean);
  double cdf = p;
  int n = 0;
  // The tail beyond a few hundred terms is below double resolution for any sane mean.
  while (u >= cdf && n < 100000) {
    ++n;
    p *= mean / n;
    cdf += p;
    if (p == 0 && cdf < u) break;
  }
  return n;
}

}  // namespace hstore
