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

#include "hstore/config.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

namespace hstore {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 2 * kPi;

// JSON has no infinity; a monochromatic pulse is written as "inf".
json finite_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double read_number(const json &v, const std::string &key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
  }
  throw std::invalid_argument("config: " + key + " must be a number");
}

void check_keys(const json &section, const std::string &name, const std::set<std::string> &allowed) {
  if (!section.is_object()) throw std::invalid_argument("config: section " + name + " must be an object");
  for (auto it = section.begin(); it != section.end(); ++it) {
    if (!allowed.count(it.key())) throw std::invalid_argument("config: unknown key " + name + "." + it.key());
  }
}

template <typename F>
void maybe(const json &section, const std::string &sec, const char *key, F &&set) {
  if (section.contains(key)) set(section.at(key), sec + "." + key);
}

}  // namespace

void AppConfig::validate() const {
  cavity.validate();
  pulse.validate();
  errors.validate();
  if (quad.points < 3 || !(quad.span_sigma > 0)) throw std::invalid_argument("config: bad quadrature settings");
  if (experiment.n_trials == 0) throw std::invalid_argument("config: experiment.n_trials must be positive");
  if (!(experiment.readout_nbar >= 0) || !std::isfinite(experiment.readout_nbar)) {
    throw std::invalid_argument("config: experiment.readout_nbar must be non-negative");
  }
}

json config_to_json(const AppConfig &c) {
  json j;
  j["cavity"] = {{"g_mhz", c.cavity.g / kTwoPi},
                 {"kappa_mhz", c.cavity.kappa / kTwoPi},
                 {"gamma_mhz", c.cavity.gamma / kTwoPi},
                 {"t_coupling_ppm", c.cavity.t_coupling_ppm},
                 {"loss_other_ppm", c.cavity.loss_other_ppm},
                 {"delta_a_mhz", c.cavity.delta_a / kTwoPi},
                 {"delta_c_mhz", c.cavity.delta_c / kTwoPi},
                 {"kappa_ext_mhz", c.cavity.kappa_ext_override ? json(*c.cavity.kappa_ext_override / kTwoPi)
                                                               : json(nullptr)}};
  j["pulse"] = {{"fwhm_us", finite_or_inf(c.pulse.fwhm_time)},
                {"carrier_detuning_mhz", c.pulse.carrier_detuning / kTwoPi},
                {"nbar", c.pulse.nbar},
                {"arrival_time_us", c.pulse.arrival_time},
                {"quadrature_points", c.quad.points},
                {"quadrature_span_sigma", c.quad.span_sigma}};
  j["errors"] = {{"mode_overlap", c.errors.mode_overlap},
                 {"p_prep_error", c.errors.p_prep_error},
                 {"p_dark_per_window", c.errors.p_dark_per_window},
                 {"p_pol_optics", c.errors.p_pol_optics},
                 {"birefringence_phase", c.errors.birefringence_phase},
                 {"detector_efficiency", c.errors.detector_efficiency},
                 {"multiphoton_discard", c.errors.multiphoton_discard}};
  j["experiment"] = {{"n_trials", c.experiment.n_trials},
                     {"seed", c.experiment.seed},
                     {"threads", c.experiment.threads},
                     {"ideal_gate", c.experiment.ideal_gate},
                     {"readout_nbar", c.experiment.readout_nbar}};
  return j;
}

AppConfig config_from_json(const json &j) {
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  check_keys(j, "config", {"cavity", "pulse", "errors", "experiment"});
  AppConfig c;
  auto num = [](double &dst, double scale = 1.0) {
    return [&dst, scale](const json &v, const std::string &k) { dst = read_number(v, k) * scale; };
  };
  if (j.contains("cavity")) {
    const json &s = j.at("cavity");
    check_keys(s, "cavity",
               {"g_mhz", "kappa_mhz", "gamma_mhz", "t_coupling_ppm", "loss_other_ppm", "delta_a_mhz", "delta_c_mhz",
                "kappa_ext_mhz"});
    maybe(s, "cavity", "g_mhz", num(c.cavity.g, kTwoPi));
    maybe(s, "cavity", "kappa_mhz", num(c.cavity.kappa, kTwoPi));
    maybe(s, "cavity", "gamma_mhz", num(c.cavity.gamma, kTwoPi));
    maybe(s, "cavity", "t_coupling_ppm", num(c.cavity.t_coupling_ppm));
    maybe(s, "cavity", "loss_other_ppm", num(c.cavity.loss_other_ppm));
    maybe(s, "cavity", "delta_a_mhz", num(c.cavity.delta_a, kTwoPi));
    maybe(s, "cavity", "delta_c_mhz", num(c.cavity.delta_c, kTwoPi));
    maybe(s, "cavity", "kappa_ext_mhz", [&](const json &v, const std::string &k) {
      if (v.is_null()) {
        c.cavity.kappa_ext_override.reset();
      } else {
        c.cavity.kappa_ext_override = read_number(v, k) * kTwoPi;
      }
    });
  }
  if (j.contains("pulse")) {
    const json &s = j.at("pulse");
    check_keys(s, "pulse",
               {"fwhm_us", "carrier_detuning_mhz", "nbar", "arrival_time_us", "quadrature_points",
                "quadrature_span_sigma"});
    maybe(s, "pulse", "fwhm_us", num(c.pulse.fwhm_time));
    maybe(s, "pulse", "carrier_detuning_mhz", num(c.pulse.carrier_detuning, kTwoPi));
    maybe(s, "pulse", "nbar", num(c.pulse.nbar));
    maybe(s, "pulse", "arrival_time_us", num(c.pulse.arrival_time));
    maybe(s, "pulse", "quadrature_points", [&](const json &v, const std::string &k) {
      if (!v.is_number_integer()) throw std::invalid_argument("config: " + k + " must be an integer");
      c.quad.points = v.get<int>();
    });
    maybe(s, "pulse", "quadrature_span_sigma", num(c.quad.span_sigma));
  }
  if (j.contains("errors")) {
    const json &s = j.at("errors");
    check_keys(s, "errors",
               {"mode_overlap", "p_prep_error", "p_dark_per_window", "p_pol_optics", "birefringence_phase",
                "detector_efficiency", "multiphoton_discard"});
    maybe(s, "errors", "mode_overlap", num(c.errors.mode_overlap));
    maybe(s, "errors", "p_prep_error", num(c.errors.p_prep_error));
    maybe(s, "errors", "p_dark_per_window", num(c.errors.p_dark_per_window));
    maybe(s, "errors", "p_pol_optics", num(c.errors.p_pol_optics));
    maybe(s, "errors", "birefringence_phase", num(c.errors.birefringence_phase));
    maybe(s, "errors", "detector_efficiency", num(c.errors.detector_efficiency));
    maybe(s, "errors", "multiphoton_discard", num(c.errors.multiphoton_discard));
  }
  if (j.contains("experiment")) {
    const json &s = j.at("experiment");
    check_keys(s, "experiment", {"n_trials", "seed", "threads", "ideal_gate", "readout_nbar"});
    auto uint = [](auto &dst) {
      return [&dst](const json &v, const std::string &k) {
        if (!v.is_number_unsigned()) throw std::invalid_argument("config: " + k + " must be a non-negative integer");
        dst = v.get<std::remove_reference_t<decltype(dst)>>();
      };
    };
    maybe(s, "experiment", "n_trials", uint(c.experiment.n_trials));
    maybe(s, "experiment", "seed", uint(c.experiment.seed));
    maybe(s, "experiment", "threads", uint(c.experiment.threads));
    maybe(s, "experiment", "ideal_gate", [&](const json &v, const std::string &k) {
      if (!v.is_boolean()) throw std::invalid_argument("config: " + k + " must be true or false");
      c.experiment.ideal_gate = v.get<bool>();
    });
    maybe(s, "experiment", "readout_nbar", num(c.experiment.readout_nbar));
  }
  c.validate();
  return c;
}

AppConfig load_config(const std::string &path) {
  if (path.empty()) return AppConfig{};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return config_from_json(j);
}

void apply_override(AppConfig &c, std::string_view assignment) {
  auto eq = assignment.find('=');
  auto dot = assignment.find('.');
  if (eq == std::string_view::npos || dot == std::string_view::npos || dot > eq) {
    throw std::invalid_argument("override must look like section.field=value: " + std::string(assignment));
  }
  std::string section(assignment.substr(0, dot));
  std::string field(assignment.substr(dot + 1, eq - dot - 1));
  std::string text(assignment.substr(eq + 1));
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  json j = config_to_json(c);
  if (!j.contains(section)) throw std::invalid_argument("override: unknown section " + section);
  if (!j[section].contains(field)) throw std::invalid_argument("override: unknown key " + section + "." + field);
  j[section][field] = value;
  c = config_from_json(j);
}

ExperimentConfig make_experiment_config(const AppConfig &c, Scenario scenario) {
  ExperimentConfig e;
  e.n_trials = c.experiment.n_trials;
  e.seed = c.experiment.seed;
  e.threads = c.experiment.threads;
  e.ideal_gate = c.experiment.ideal_gate;
  e.cavity = c.cavity;
  e.pulse = c.pulse;
  if (scenario == Scenario::Readout) e.pulse.nbar = c.experiment.readout_nbar;
  e.errors = c.errors;
  e.quad = c.quad;
  return e;
}

}  // namespace hstore
