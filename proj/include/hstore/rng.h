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

#ifndef HSTORE_RNG_H
#define HSTORE_RNG_H

#include <cstdint>
#include <limits>

namespace hstore {

/// Counter-based generator: output k of stream s under key is a fixed
/// bijective hash of (key, s, k), so every trial owns an independent,
/// reproducible stream regardless of which thread evaluates it.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t key, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Poisson sample by inverse transform; consumes exactly one uniform.
  int poisson(double mean);

  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives a sub-key, e.g. one per input state of an experiment batch.
std::uint64_t derive_key(std::uint64_t key, std::uint64_t tag);

}  // namespace hstore

#endif
