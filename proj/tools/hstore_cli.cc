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

// Command-line front end: curves, simulations, tomography, comparisons and
// the error budget. Reports are JSON, curves and counts are CSV.

#include <algorithm>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hstore/analysis.h"
#include "hstore/calibration.h"
#include "hstore/config.h"
#include "hstore/experiment.h"
#include "hstore/pulse.h"
#include "hstore/serialize.h"
#include "hstore/tomography.h"

using namespace hstore;
using nlohmann::json;

namespace {

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<unsigned> threads;
  std::string out = "-";
};

AppConfig resolve_config(const Common &c) {
  AppConfig cfg = load_config(c.config_path);
  for (const std::string &o : c.overrides) apply_override(cfg, o);
  if (c.seed) cfg.experiment.seed = *c.seed;
  if (c.trials) cfg.experiment.n_trials = *c.trials;
  if (c.threads) cfg.experiment.threads = *c.threads;
  cfg.validate();
  return cfg;
}

void emit(const Common &c, const std::string &text) {
  if (c.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

json bound_json(double fidelity, double nbar, double efficiency) {
  try {
    ClassicalBoundCheck b = classical_bound_check(fidelity, nbar, efficiency);
    return {{"verdict", verdict_name(b.verdict)}, {"bound", rounded(b.bound)}, {"margin", rounded(b.margin)}};
  } catch (const std::domain_error &e) {
    return {{"verdict", "not_applicable"}, {"reason", e.what()}};
  }
}

json herald_json(const std::map<Herald, ProcessResult> &m) {
  json j = json::object();
  HeraldFidelities f = herald_conditioned_fidelities(m);
  j["down_x"] = f.down_x ? rounded(*f.down_x) : json(nullptr);
  j["up_x"] = f.up_x ? rounded(*f.up_x) : json(nullptr);
  return j;
}

// ---- curves ---------------------------------------------------------------

struct PhaseArgs {
  double from = -1.5, to = 1.5;
  int points = 601;
  std::optional<double> delta_a_mhz, delta_c_mhz;
  bool unwrapped = false;
};

void run_curves_phase(const Common &c, const PhaseArgs &a) {
  AppConfig cfg = resolve_config(c);
  DetuningOverrides ov;
  if (a.delta_a_mhz) ov.delta_a = 2 * kPi * *a.delta_a_mhz;
  if (a.delta_c_mhz) ov.delta_c = 2 * kPi * *a.delta_c_mhz;
  PhaseCurve pc = phase_curve(cfg.cavity, linspace(a.from, a.to, a.points), ov);
  std::ostringstream s;
  write_curve_csv(s, a.unwrapped ? pc.unwrapped : pc.wrapped);
  emit(c, s.str());
}

struct FlipArgs {
  double from = 0.05, to = 3.0;
  int points = 60;
  double eta_max = kDefaultFlipPlateau;
};

void run_curves_flip(const Common &c, const FlipArgs &a) {
  AppConfig cfg = resolve_config(c);
  auto pts = flip_probability_curve(cfg.cavity, linspace(a.from, a.to, a.points), a.eta_max, cfg.pulse, cfg.quad);
  std::ostringstream s;
  write_curve_csv(s, pts);
  emit(c, s.str());
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
  std::string counts_out;
};

void run_simulate(const Common &c, const SimulateArgs &a, Scenario scenario) {
  AppConfig cfg = resolve_config(c);
  ExperimentConfig ec = make_experiment_config(cfg, scenario);
  TomographyPipeline p = scenario == Scenario::Storage ? run_storage_pipeline(ec) : run_readout_pipeline(ec);

  std::vector<CountsRow> rows;
  json runs = json::array();
  for (const ExperimentResult &r : p.runs) {
    runs.push_back(to_json(r));
    auto rr = r.rows();
    rows.insert(rows.end(), rr.begin(), rr.end());
  }
  if (!a.counts_out.empty()) {
    std::ofstream f(a.counts_out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.counts_out);
    write_counts_csv(f, rows);
  }

  json j;
  j["scenario"] = scenario == Scenario::Storage ? "storage" : "readout";
  j["config"] = config_to_json(cfg);
  // Thread count does not affect results; keep it out so reports compare byte for byte.
  j["config"]["experiment"].erase("threads");
  j["runs"] = runs;
  j["efficiency"] = rounded(p.efficiency);
  j["efficiency_with_dark"] = rounded(p.efficiency_with_dark);
  json by = json::object();
  for (const auto &[h, pr] : p.by_herald) by[herald_name(h)] = to_json(pr);
  j["by_herald"] = by;
  j["herald_fidelities"] = herald_json(p.by_herald);
  if (scenario == Scenario::Storage) {
    j["process"] = to_json(p.combined);
    j["average_fidelity"] = rounded(p.combined.average_fidelity);
    j["classical_bound"] = bound_json(p.combined.average_fidelity, ec.pulse.nbar, p.efficiency);
  } else {
    std::uint64_t down = 0, total = 0;
    for (const ExperimentResult &r : p.runs) {
      down += r.counts.table(Herald::DownX).total();
      total += r.counts.all().total();
    }
    j["fraction_down_x"] = total ? rounded(double(down) / double(total)) : json(nullptr);
  }
  emit(c, dump(j));
}

// ---- tomography -----------------------------------------------------------

struct TomoArgs {
  std::string counts_path;
  std::string scenario = "storage";
  std::vector<std::string> heralds;
};

std::vector<CountsRow> load_rows(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open counts file " + path);
  return read_counts_csv(f);
}

std::vector<std::string> herald_filter(const TomoArgs &a, std::optional<Herald> only) {
  if (!a.heralds.empty()) return a.heralds;
  if (only) return {herald_name(*only), std::string("dark_") + herald_name(*only)};
  return {"down_x", "up_x", "dark_down_x", "dark_up_x"};
}

void run_tomography_reconstruct(const Common &c, const TomoArgs &a) {
  std::vector<CountsRow> rows = load_rows(a.counts_path);
  std::vector<std::string> inputs;
  for (const CountsRow &r : rows) {
    if (std::find(inputs.begin(), inputs.end(), r.input_state) == inputs.end()) inputs.push_back(r.input_state);
  }
  std::sort(inputs.begin(), inputs.end());
  json j = json::object();
  for (const std::string &in : inputs) {
    j[in] = to_json(reconstruct_state(collect_counts(rows, in, herald_filter(a, std::nullopt))));
  }
  emit(c, dump(j));
}

void run_tomography_process(const Common &c, const TomoArgs &a) {
  Scenario scenario;
  if (a.scenario == "storage") {
    scenario = Scenario::Storage;
  } else if (a.scenario == "readout") {
    scenario = Scenario::Readout;
  } else {
    throw std::invalid_argument("scenario must be storage or readout");
  }
  std::vector<CountsRow> rows = load_rows(a.counts_path);
  auto states = mub_states();
  auto labels = mub_labels();
  std::vector<PureState> inputs(states.begin(), states.end());
  auto fit = [&](std::optional<Herald> h) {
    std::vector<TomographyResult> outs;
    std::vector<PureState> targets;
    for (std::size_t k = 0; k < 6; ++k) {
      outs.push_back(reconstruct_state(collect_counts(rows, labels[k], herald_filter(a, h))));
      targets.push_back(scenario == Scenario::Storage ? transfer_target(states[k])
                                                      : readout_target(states[k], h.value_or(Herald::DownX)));
    }
    return characterize_process(inputs, outs, targets);
  };
  json j;
  std::map<Herald, ProcessResult> by;
  json by_json = json::object();
  for (Herald h : {Herald::DownX, Herald::UpX}) {
    try {
      by[h] = fit(h);
      by_json[herald_name(h)] = to_json(by[h]);
    } catch (const std::invalid_argument &) {
      by_json[herald_name(h)] = nullptr;
    }
  }
  if (scenario == Scenario::Storage) j["process"] = to_json(fit(std::nullopt));
  j["by_herald"] = by_json;
  j["herald_fidelities"] = herald_json(by);
  emit(c, dump(j));
}

// ---- compare / budget -----------------------------------------------------

void run_compare_bsm(const Common &c, const EfficiencyScenario &s) {
  json j = {{"eta_gen", s.eta_gen},
            {"eta_det", s.eta_det},
            {"R_avg", s.R_avg},
            {"bsm_efficiency", rounded(bsm_efficiency(s))},
            {"heralded_storage_efficiency", rounded(heralded_storage_efficiency(s))},
            {"advantage_ratio", rounded(advantage_ratio(s))}};
  emit(c, dump(j));
}

void run_budget(const Common &c, bool calibrate) {
  AppConfig cfg = resolve_config(c);
  ExperimentConfig ec = make_experiment_config(cfg, Scenario::Storage);
  ExperimentConfig rc = make_experiment_config(cfg, Scenario::Readout);
  ErrorModel model = cfg.errors;
  json j;
  if (calibrate) {
    CalibrationResult r = calibrate_error_model(BudgetTargets{}, ec);
    model = r.model;
    j["calibrated_errors"] = config_to_json(AppConfig{cfg.cavity, cfg.pulse, model, cfg.quad, cfg.experiment})["errors"];
  }
  auto storage = per_channel_storage_reductions(ec, model);
  auto readout = per_channel_readout_reductions(rc, model);
  BudgetReport itemized = budget_report(itemized_storage_budget());
  BudgetTargets targets;
  json items = json::array();
  for (std::size_t i = 0; i < kChannels.size(); ++i) {
    items.push_back({{"channel", channel_name(kChannels[i])},
                     {"target_points", targets.points[i]},
                     {"storage_points", rounded(storage[i])},
                     {"readout_down_x_points", rounded(readout[i].down_x)},
                     {"readout_up_x_points", rounded(readout[i].up_x)}});
  }
  ReadoutReductions rr = readout_reductions(rc, model);
  double sum = 0;
  for (double v : storage) sum += v;
  j["channels"] = items;
  j["itemized_total"] = rounded(itemized.total);
  j["sum_of_single_channels"] = rounded(sum);
  j["combined_storage_points"] = rounded(storage_reduction(ec, model));
  j["combined_readout_points"] = {{"down_x", rounded(rr.down_x)}, {"up_x", rounded(rr.up_x)}};
  j["reference_totals"] = {
      {"storage", kStorageBudgetTotal}, {"readout_down_x", kReadoutBudgetDownX}, {"readout_up_x", kReadoutBudgetUpX}};
  emit(c, dump(j));
}

void print_error(const std::string &type, const std::string &msg, int code) {
  json e = {{"error", {{"type", type}, {"message", msg}, {"exit_code", code}}}};
  std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"hstore: heralded photon-to-atom storage simulator"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--config", common.config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--set", common.overrides, "Override a config field, section.field=value");
  app.add_option("--seed", common.seed, "Random seed");
  app.add_option("--trials", common.trials, "Trials per input state");
  app.add_option("--threads", common.threads, "Worker threads (0 = hardware)");
  app.add_option("--out", common.out, "Output file, - for stdout");

  std::function<void()> action;

  CLI::App *curves = app.add_subcommand("curves", "Spectral curves as CSV");
  curves->require_subcommand(1);
  PhaseArgs phase_args;
  CLI::App *phase = curves->add_subcommand("phase", "Phase difference versus detuning / g");
  phase->add_option("--from", phase_args.from);
  phase->add_option("--to", phase_args.to);
  phase->add_option("--points", phase_args.points)->check(CLI::Range(2, 1000000));
  auto *oa = phase->add_option("--delta-a-mhz", phase_args.delta_a_mhz, "Atomic detuning");
  phase->add_option("--delta-c-mhz", phase_args.delta_c_mhz, "Cavity detuning")->excludes(oa);
  phase->add_flag("--unwrapped", phase_args.unwrapped);
  phase->callback([&] { action = [&] { run_curves_phase(common, phase_args); }; });
  FlipArgs flip_args;
  CLI::App *flip = curves->add_subcommand("flip", "Flip probability versus pulse FWHM");
  flip->add_option("--from", flip_args.from);
  flip->add_option("--to", flip_args.to);
  flip->add_option("--points", flip_args.points)->check(CLI::Range(2, 1000000));
  flip->add_option("--eta-max", flip_args.eta_max)->check(CLI::Range(0.0, 1.0));
  flip->callback([&] { action = [&] { run_curves_flip(common, flip_args); }; });

  CLI::App *simulate = app.add_subcommand("simulate", "Monte Carlo plus tomography over six inputs");
  simulate->require_subcommand(1);
  SimulateArgs sim_args;
  for (auto [name, sc] : {std::pair{"storage", Scenario::Storage}, std::pair{"readout", Scenario::Readout}}) {
    CLI::App *s = simulate->add_subcommand(name, std::string(name) + " experiment");
    s->add_option("--counts", sim_args.counts_out, "Also write the counts CSV here");
    Scenario scen = sc;
    s->callback([&, scen] { action = [&, scen] { run_simulate(common, sim_args, scen); }; });
  }

  CLI::App *tomo = app.add_subcommand("tomography", "Tomography from a counts CSV");
  tomo->require_subcommand(1);
  TomoArgs tomo_args;
  CLI::App *recon = tomo->add_subcommand("reconstruct", "One state per input label");
  recon->add_option("--counts", tomo_args.counts_path)->required()->check(CLI::ExistingFile);
  recon->add_option("--herald", tomo_args.heralds, "Restrict to these herald columns");
  recon->callback([&] { action = [&] { run_tomography_reconstruct(common, tomo_args); }; });
  CLI::App *proc = tomo->add_subcommand("process", "Affine Bloch map over the six inputs");
  proc->add_option("--counts", tomo_args.counts_path)->required()->check(CLI::ExistingFile);
  proc->add_option("--scenario", tomo_args.scenario)->check(CLI::IsMember({"storage", "readout"}));
  proc->add_option("--herald", tomo_args.heralds, "Restrict to these herald columns");
  proc->callback([&] { action = [&] { run_tomography_process(common, tomo_args); }; });

  CLI::App *compare = app.add_subcommand("compare", "Efficiency comparisons");
  compare->require_subcommand(1);
  EfficiencyScenario eff;
  CLI::App *bsm = compare->add_subcommand("bsm", "Heralded storage against a Bell-state measurement");
  bsm->add_option("--eta-gen", eff.eta_gen)->check(CLI::Range(0.0, 1.0));
  bsm->add_option("--eta-det", eff.eta_det)->check(CLI::Range(0.0, 1.0));
  bsm->add_option("--r-avg", eff.R_avg)->check(CLI::Range(0.0, 1.0));
  bsm->callback([&] { action = [&] { run_compare_bsm(common, eff); }; });

  bool calibrate = false;
  CLI::App *budget = app.add_subcommand("budget", "Per-channel fidelity reductions");
  budget->add_flag("--calibrate", calibrate, "Recalibrate the channels to the reference budget first");
  budget->callback([&] { action = [&] { run_budget(common, calibrate); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    print_error("usage", e.what(), 2);
    return 2;
  }
  try {
    if (action) action();
  } catch (const std::invalid_argument &e) {
    print_error("invalid_argument", e.what(), 1);
    return 1;
  } catch (const std::domain_error &e) {
    print_error("domain_error", e.what(), 1);
    return 1;
  } catch (const std::exception &e) {
    print_error("runtime_error", e.what(), 1);
    return 1;
  }
  return 0;
}
