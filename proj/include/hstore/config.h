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

#ifndef HSTORE_CONFIG_H
#define HSTORE_CONFIG_H

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hstore/experiment.h"

namespace hstore {

struct ExperimentSettings {
  std::uint64_t n_trials = 300000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool ideal_gate = false;
  /// Mean photon number of the readout pulses (storage uses pulse.nbar).
  double readout_nbar = kReadoutNbar;
};

/// Everything the command line tool reads from its JSON file.
///
/// On disk, rates and detunings are ordinary frequencies in MHz (so g is
/// 6.7, not 2 pi 6.7) and times are in us:
///   {"cavity": {"g_mhz", "kappa_mhz", "gamma_mhz", "t_coupling_ppm",
///               "loss_other_ppm", "delta_a_mhz", "delta_c_mhz", "kappa_ext_mhz"},
///    "pulse": {"fwhm_us", "carrier_detuning_mhz", "nbar", "arrival_time_us",
///              "quadrature_points", "quadrature_span_sigma"},
///    "errors": {ErrorModel field names},
///    "experiment": {"n_trials", "seed", "threads", "ideal_gate", "readout_nbar"}}
/// Missing keys keep their defaults; unknown keys are rejected.
struct AppConfig {
  CavityParams cavity;
  GaussianPulse pulse;
  ErrorModel errors;
  Quadrature quad;
  ExperimentSettings experiment;

  void validate() const;
};

nlohmann::json config_to_json(const AppConfig &c);
AppConfig config_from_json(const nlohmann::json &j);
/// Defaults if path is empty.
AppConfig load_config(const std::string &path);

/// Applies "section.field=value"; value is parsed as JSON when possible,
/// otherwise taken as a string.
void apply_override(AppConfig &c, std::string_view assignment);

/// Experiment configuration for one scenario; readout swaps in readout_nbar.
ExperimentConfig make_experiment_config(const AppConfig &c, Scenario scenario);

}  // namespace hstore

#endif
