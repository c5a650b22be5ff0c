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

#include <cmath>
#include <set>

#include "doctest.h"
#include "hstore/rng.h"

using namespace hstore;

TEST_CASE("counter_rng_is_reproducible") {
  CounterRng a(42, 7), b(42, 7);
  for (int k = 0; k < 100; ++k) CHECK(a() == b());
  CounterRng c(42, 8), d(43, 7);
  CounterRng e(42, 7);
  int same_c = 0, same_d = 0;
  for (int k = 0; k < 100; ++k) {
    auto v = e();
    same_c += c() == v;
    same_d += d() == v;
  }
  CHECK(same_c == 0);
  CHECK(same_d == 0);
}

TEST_CASE("uniform_range_and_moments") {
  CounterRng r(1, 0);
  const int n = 200000;
  double sum = 0, sq = 0;
  for (int k = 0; k < n; ++k) {
    double u = r.uniform();
    REQUIRE(u >= 0);
    REQUIRE(u < 1);
    sum += u;
    sq += u * u;
  }
  CHECK(std::abs(sum / n - 0.5) < 4 * std::sqrt(1.0 / 12 / n));
  CHECK(std::abs(sq / n - 1.0 / 3) < 0.005);
}

TEST_CASE("neighbouring_streams_uncorrelated") {
  // Correlation of first draws across consecutive stream indices.
  const int n = 100000;
  double sxy = 0, sx = 0, sy = 0;
  for (int k = 0; k < n; ++k) {
    double x = CounterRng(9, k).uniform(), y = CounterRng(9, k + 1).uniform();
    sx += x;
    sy += y;
    sxy += x * y;
  }
  double cov = sxy / n - (sx / n) * (sy / n);
  CHECK(std::abs(cov / (1.0 / 12)) < 0.02);
}

TEST_CASE("poisson_moments") {
  for (double mean : {0.09, 1.5, 7.0}) {
    CounterRng r(3, 1);
    const int n = 200000;
    double s = 0, s2 = 0;
    for (int k = 0; k < n; ++k) {
      double x = r.poisson(mean);
      s += x;
      s2 += x * x;
    }
    double m = s / n, var = s2 / n - m * m;
    CHECK(std::abs(m - mean) < 5 * std::sqrt(mean / n));
    CHECK(var == doctest::Approx(mean).epsilon(0.03));
  }
}

TEST_CASE("poisson_uses_one_draw") {
  CounterRng r(5, 5);
  r.poisson(3.0);
  CHECK(r.draws() == 1);
  r.poisson(0.0);
  CHECK(r.draws() == 2);
  CHECK_THROWS(r.poisson(-1));
}

TEST_CASE("derived_keys_distinct") {
  std::set<std::uint64_t> keys;
  for (std::uint64_t k = 0; k < 1000; ++k) keys.insert(derive_key(1, k));
  CHECK(keys.size() == 1000);
}
