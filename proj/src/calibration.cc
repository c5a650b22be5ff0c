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

#include "hstore/calibration.h"

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/math/tools/roots.hpp>

namespace hstore {

const char *channel_name(Channel c) {
  switch (c) {
    case Channel::ModeOverlap:
      return "mode_overlap";
    case Channel::PrepError:
      return "prep_error";
    case Channel::DarkCounts:
      return "dark_counts";
    case Channel::PolOptics:
      return "pol_optics";
    case Channel::TwoPhoton:
      return "two_photon";
    case Channel::Birefringence:
      return "birefringence";
  }
  return "?";
}

ChannelRange channel_range(Channel c) {
  switch (c) {
    case Channel::ModeOverlap:
      return {1.0, 0.3};
    case Channel::PrepError:
      return {0.0, 0.5};
    case Channel::DarkCounts:
      return {0.0, 0.05};
    case Channel::PolOptics:
      return {0.0, 0.5};
    case Channel::TwoPhoton:
      return {1.0, 0.0};
    case Channel::Birefringence:
      return {0.0, kPi / 2};
  }
  return {0, 0};
}

double channel_value(const ErrorModel &e, Channel c) {
  switch (c) {
    case Channel::ModeOverlap:
      return e.mode_overlap;
    case Channel::PrepError:
      return e.p_prep_error;
    case Channel::DarkCounts:
      return e.p_dark_per_window;
    case Channel::PolOptics:
      return e.p_pol_optics;
    case Channel::TwoPhoton:
      return e.multiphoton_discard;
    case Channel::Birefringence:
      return e.birefringence_phase;
  }
  return 0;
}

void set_channel(ErrorModel &e, Channel c, double value) {
  switch (c) {
    case Channel::ModeOverlap:
      e.mode_overlap = value;
      break;
    case Channel::PrepError:
      e.p_prep_error = value;
      break;
    case Channel::DarkCounts:
      e.p_dark_per_window = value;
      break;
    case Channel::PolOptics:
      e.p_pol_optics = value;
      break;
    case Channel::TwoPhoton:
      e.multiphoton_discard = value;
      break;
    case Channel::Birefringence:
      e.birefringence_phase = value;
      break;
  }
}

namespace {

ErrorModel off_model(const ErrorModel &base) {
  ErrorModel e = ErrorModel::none();
  e.detector_efficiency = base.detector_efficiency;
  return e;
}

double storage_fidelity(ExperimentConfig cfg, const ErrorModel &model) {
  cfg.errors = model;
  return expected_storage(cfg).average;
}

}  // namespace

ErrorModel single_channel_model(const ErrorModel &base, Channel c, double value) {
  ErrorModel e = off_model(base);
  set_channel(e, c, value);
  return e;
}

double storage_reduction(const ExperimentConfig &cfg, const ErrorModel &model) {
  return 100.0 * (storage_fidelity(cfg, off_model(model)) - storage_fidelity(cfg, model));
}

ReadoutReductions readout_reductions(const ExperimentConfig &cfg, const ErrorModel &model) {
  ExperimentConfig c = cfg;
  c.errors = off_model(model);
  ReadoutExpectation off = expected_readout(c);
  c.errors = model;
  ReadoutExpectation on = expected_readout(c);
  return {100.0 * (off.average_down - on.average_down), 100.0 * (off.average_up - on.average_up)};
}

CalibrationResult calibrate_error_model(const BudgetTargets &targets, const ExperimentConfig &cfg) {
  CalibrationResult out;
  out.model = off_model(cfg.errors);
  const double f_off = storage_fidelity(cfg, out.model);
  out.baseline_fidelity = f_off;
  for (Channel c : kChannels) {
    const double target = targets[c];
    ChannelRange range = channel_range(c);
    if (target == 0) {
      set_channel(out.model, c, range.off);
      continue;
    }
    auto residual = [&](double v) {
      return 100.0 * (f_off - storage_fidelity(cfg, single_channel_model(cfg.errors, c, v))) - target;
    };
    double lo = std::min(range.off, range.limit), hi = std::max(range.off, range.limit);
    double flo = residual(lo), fhi = residual(hi);
    if (flo * fhi > 0) {
      throw std::runtime_error(std::string("calibrate_error_model: target for ") + channel_name(c) +
                               " unreachable within the parameter range");
    }
    std::uintmax_t iters = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(40);
    auto [a, b] = boost::math::tools::toms748_solve(residual, lo, hi, flo, fhi, tol, iters);
    set_channel(out.model, c, 0.5 * (a + b));
  }
  for (Channel c : kChannels) {
    auto i = static_cast<std::size_t>(c);
    out.single_channel[i] = storage_reduction(cfg, single_channel_model(out.model, c, channel_value(out.model, c)));
  }
  out.combined = storage_reduction(cfg, out.model);
  return out;
}

std::array<double, 6> per_channel_storage_reductions(const ExperimentConfig &cfg, const ErrorModel &model) {
  std::array<double, 6> out{};
  for (Channel c : kChannels) {
    out[static_cast<std::size_t>(c)] = storage_reduction(cfg, single_channel_model(model, c, channel_value(model, c)));
  }
  return out;
}

std::array<ReadoutReductions, 6> per_channel_readout_reductions(const ExperimentConfig &cfg,
                                                                const ErrorModel &model) {
  std::array<ReadoutReductions, 6> out{};
  for (Channel c : kChannels) {
    out[static_cast<std::size_t>(c)] =
        readout_reductions(cfg, single_channel_model(model, c, channel_value(model, c)));
  }
  return out;
}

}  // namespace hstore
