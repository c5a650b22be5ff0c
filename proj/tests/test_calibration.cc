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
#include <stdexcept>

#include "doctest.h"
#include "hstore/calibration.h"

using namespace hstore;

TEST_CASE("channels_off_give_no_reduction") {
  ExperimentConfig c;
  ErrorModel off = ErrorModel::none();
  for (Channel ch : kChannels) {
    CHECK(channel_value(off, ch) == channel_range(ch).off);
    CHECK(storage_reduction(c, off) == doctest::Approx(0).epsilon(1e-12));
  }
  ReadoutReductions r = readout_reductions(c, off);
  CHECK(std::abs(r.down_x) < 1e-12);
  CHECK(std::abs(r.up_x) < 1e-12);
}

TEST_CASE("set_and_read_channels") {
  ErrorModel e = ErrorModel::none();
  for (Channel ch : kChannels) {
    ChannelRange rg = channel_range(ch);
    double mid = 0.5 * (rg.off + rg.limit);
    set_channel(e, ch, mid);
    CHECK(channel_value(e, ch) == mid);
    ErrorModel single = single_channel_model(ErrorModel{}, ch, mid);
    for (Channel other : kChannels) {
      if (other != ch) CHECK(channel_value(single, other) == channel_range(other).off);
    }
  }
}

TEST_CASE("reductions_grow_with_each_channel") {
  ExperimentConfig c;
  for (Channel ch : kChannels) {
    ChannelRange rg = channel_range(ch);
    double prev = -1e-12;
    for (double t : {0.0, 0.05, 0.1, 0.2}) {
      double red = storage_reduction(c, single_channel_model(ErrorModel{}, ch, rg.off + t * (rg.limit - rg.off)));
      CHECK(red >= prev);
      prev = red;
    }
  }
}

TEST_CASE("calibration_reaches_targets") {
  ExperimentConfig c;
  CalibrationResult r = calibrate_error_model(BudgetTargets{}, c);
  BudgetTargets t;
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(r.single_channel[i] - t.points[i]) <= 0.2);
  CHECK(channel_value(r.model, Channel::ModeOverlap) == doctest::Approx(0.9233).epsilon(1e-3));
  CHECK(r.baseline_fidelity > 0.98);
  CHECK(r.combined > 9);

  // The shipped defaults are this calibration.
  ErrorModel d;
  for (Channel ch : kChannels) {
    CHECK(channel_value(d, ch) == doctest::Approx(channel_value(r.model, ch)).epsilon(1e-4));
  }
  auto per = per_channel_storage_reductions(c, d);
  for (std::size_t i = 0; i < 6; ++i) CHECK(per[i] == doctest::Approx(t.points[i]).epsilon(1e-3));
}

TEST_CASE("unreachable_target_throws") {
  ExperimentConfig c;
  BudgetTargets t;
  t.points[static_cast<std::size_t>(Channel::DarkCounts)] = 90;
  CHECK_THROWS_AS(calibrate_error_model(t, c), std::runtime_error);
}
