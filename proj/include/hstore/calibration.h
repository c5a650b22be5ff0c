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

#ifndef HSTORE_CALIBRATION_H
#define HSTORE_CALIBRATION_H

#include <array>

#include "hstore/experiment.h"

namespace hstore {

enum class Channel { ModeOverlap, PrepError, DarkCounts, PolOptics, TwoPhoton, Birefringence };
inline constexpr std::array<Channel, 6> kChannels = {Channel::ModeOverlap, Channel::PrepError,
                                                     Channel::DarkCounts,  Channel::PolOptics,
                                                     Channel::TwoPhoton,   Channel::Birefringence};
const char *channel_name(Channel c);

/// Storage fidelity reduction per channel, in percentage points.
struct BudgetTargets {
  std::array<double, 6> points = {5.5, 2.3, 1.2, 0.7, 1.2, 1.0};
  double operator[](Channel c) const { return points[static_cast<std::size_t>(c)]; }
};

/// Search interval of the channel parameter. The first bound is the value
/// with the channel switched off.
struct ChannelRange {
  double off;
  double limit;
};
ChannelRange channel_range(Channel c);

double channel_value(const ErrorModel &e, Channel c);
void set_channel(ErrorModel &e, Channel c, double value);

/// `base` with only channel c set to value (detector efficiency kept).
ErrorModel single_channel_model(const ErrorModel &base, Channel c, double value);

/// 100 * (F_off - F_model), MUB-averaged exact storage fidelity. F_off uses
/// ErrorModel::none() with cfg's detector efficiency.
double storage_reduction(const ExperimentConfig &cfg, const ErrorModel &model);

struct ReadoutReductions {
  double down_x = 0;
  double up_x = 0;
};
ReadoutReductions readout_reductions(const ExperimentConfig &cfg, const ErrorModel &model);

struct CalibrationResult {
  ErrorModel model;
  /// Reduction reached by each channel alone.
  std::array<double, 6> single_channel{};
  /// Everything on at once.
  double combined = 0;
  double baseline_fidelity = 0;
};

/// One-dimensional root search per channel against the exact engine, with
/// the other channels off. Throws std::runtime_error if a target cannot be
/// reached inside channel_range.
CalibrationResult calibrate_error_model(const BudgetTargets &targets, const ExperimentConfig &cfg);

/// Reductions caused by each channel of `model` alone.
std::array<double, 6> per_channel_storage_reductions(const ExperimentConfig &cfg, const ErrorModel &model);
std::array<ReadoutReductions, 6> per_channel_readout_reductions(const ExperimentConfig &cfg,
                                                                const ErrorModel &model);

}  // namespace hstore

#endif
