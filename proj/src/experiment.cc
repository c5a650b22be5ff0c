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

#include "hstore/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace hstore {

const char *slot_name(HeraldSlot s) {
  switch (s) {
    case HeraldSlot::DownX:
      return "down_x";
    case HeraldSlot::UpX:
      return "up_x";
    case HeraldSlot::DarkDownX:
      return "dark_down_x";
    case HeraldSlot::DarkUpX:
      return "dark_up_x";
  }
  return "?";
}

HeraldSlot make_slot(Herald h, bool dark) {
  if (dark) return h == Herald::DownX ? HeraldSlot::DarkDownX : HeraldSlot::DarkUpX;
  return h == Herald::DownX ? HeraldSlot::DownX : HeraldSlot::UpX;
}

void ExperimentConfig::validate() const {
  if (n_trials == 0) throw std::invalid_argument("ExperimentConfig: n_trials must be positive");
  cavity.validate();
  pulse.validate();
  errors.validate();
}

CountsTable ExperimentCounts::table(Herald h, bool include_dark) const {
  CountsTable t = by_slot[static_cast<std::size_t>(make_slot(h, false))];
  if (include_dark) t += by_slot[static_cast<std::size_t>(make_slot(h, true))];
  return t;
}

CountsTable ExperimentCounts::all(bool include_dark) const {
  CountsTable t = table(Herald::DownX, include_dark);
  t += table(Herald::UpX, include_dark);
  return t;
}

ExperimentCounts &ExperimentCounts::operator+=(const ExperimentCounts &o) {
  for (std::size_t i = 0; i < by_slot.size(); ++i) by_slot[i] += o.by_slot[i];
  trials += o.trials;
  trials_with_photons += o.trials_with_photons;
  true_heralds += o.true_heralds;
  dark_heralds += o.dark_heralds;
  discarded += o.discarded;
  return *this;
}

std::vector<CountsRow> ExperimentResult::rows() const {
  std::vector<CountsRow> out;
  for (HeraldSlot s : kHeraldSlots) {
    const CountsTable &t = counts.by_slot[static_cast<std::size_t>(s)];
    for (Axis b : {Axis::X, Axis::Y, Axis::Z}) {
      out.push_back({input_label, slot_name(s), b, true, t.up(b)});
      out.push_back({input_label, slot_name(s), b, false, t.down(b)});
    }
  }
  return out;
}

Axis analysis_basis_for_trial(std::uint64_t trial_index) {
  static constexpr Axis order[3] = {Axis::X, Axis::Y, Axis::Z};
  return order[trial_index % 3];
}

namespace {

Mat2c projector(const PureState &s) { return s.amplitudes() * s.amplitudes().adjoint(); }

double expectation(const Mat2c &rho, const PureState &s) {
  return (s.amplitudes().adjoint() * rho * s.amplitudes())(0, 0).real();
}

Mat2c cwise_pow(const Mat2c &m, int k) {
  Mat2c r = Mat2c::Ones();
  for (int i = 0; i < k; ++i) r = r.cwiseProduct(m);
  return r;
}

}  // namespace

TrialSimulator::TrialSimulator(Scenario scenario, const ExperimentConfig &cfg) : scenario_(scenario), cfg_(cfg) {
  cfg_.validate();
  if (scenario_ == Scenario::Storage) {
    rho0_ = projector(storage_initial_atom());
    inst_[0] = photon_instrument(cfg_.input_state, Axis::X, cfg_.cavity, cfg_.pulse, cfg_.errors, cfg_.ideal_gate,
                                 cfg_.quad);
  } else {
    rho0_ = projector(cfg_.input_state);
    for (Axis b : {Axis::X, Axis::Y, Axis::Z}) {
      inst_[static_cast<std::size_t>(b)] = photon_instrument(basis_down(Axis::X), b, cfg_.cavity, cfg_.pulse,
                                                             cfg_.errors, cfg_.ideal_gate, cfg_.quad);
    }
  }
}

TrialRecord TrialSimulator::run(std::uint64_t trial_index) const {
  const ErrorModel &e = cfg_.errors;
  CounterRng rng(cfg_.seed, trial_index);
  TrialRecord r;
  r.analysis_basis = analysis_basis_for_trial(trial_index);
  const PhotonInstrument &inst =
      scenario_ == Scenario::Storage ? inst_[0] : inst_[static_cast<std::size_t>(r.analysis_basis)];

  r.photon_number_drawn = rng.poisson(cfg_.pulse.nbar);
  r.leaked = rng.uniform() < e.p_prep_error;
  Mat2c rho = rho0_;
  int clicks[2] = {0, 0};
  for (int k = 0; k < r.photon_number_drawn; ++k) {
    bool matched = rng.uniform() < e.mode_overlap;
    double u = rng.uniform();
    double p[3];
    for (int c = 0; c < 3; ++c) {
      if (!matched) {
        p[c] = inst.mismatched[c];
      } else if (r.leaked) {
        p[c] = inst.matched[c](1, 1).real();
      } else {
        p[c] = schur_probability(inst.matched[c], rho);
      }
    }
    int c = 2;
    if (u < p[0]) {
      c = 0;
    } else if (u < p[0] + p[1]) {
      c = 1;
    }
    if (p[c] <= 0) c = 2;
    if (matched && !r.leaked) rho = inst.matched[c].cwiseProduct(rho) / p[c];
    if (c < 2) ++clicks[c];
  }
  // Fixed number of draws from here on.
  bool has_dark = rng.uniform() < e.p_dark_per_window;
  bool dark_up = rng.uniform() < 0.5;
  double u_select = rng.uniform();
  double u_discard = rng.uniform();
  double u_measure = rng.uniform();

  r.clicks = clicks[0] + clicks[1] + (has_dark ? 1 : 0);
  if (r.clicks == 0) return r;
  int sel = std::min(static_cast<int>(u_select * r.clicks), r.clicks - 1);
  bool click_up;
  if (sel < clicks[0]) {
    click_up = false;
  } else if (sel < clicks[0] + clicks[1]) {
    click_up = true;
  } else {
    click_up = dark_up;
    r.dark = true;
  }
  if (r.photon_number_drawn >= 2 && u_discard < e.multiphoton_discard) {
    r.discarded = true;
    return r;
  }
  r.heralded = true;

  rho /= rho.trace().real();
  if (scenario_ == Scenario::Storage) {
    r.herald_outcome = click_up ? Herald::UpX : Herald::DownX;
    if (click_up) {
      Mat2c f = feedback_matrix(Herald::UpX);
      rho = f * rho * f.adjoint();
    }
    double p_up = r.leaked ? 1.0 : expectation(rho, basis_up(r.analysis_basis));
    r.outcome_up = u_measure < p_up;
  } else {
    double p_up = r.leaked ? 1.0 : expectation(rho, basis_up(Axis::X));
    r.herald_outcome = u_measure < p_up ? Herald::UpX : Herald::DownX;
    r.outcome_up = click_up;
  }
  return r;
}

ExperimentResult run_experiment(Scenario scenario, const ExperimentConfig &cfg) {
  TrialSimulator sim(scenario, cfg);
  constexpr std::uint64_t kBlock = 8192;
  const std::uint64_t nblocks = (cfg.n_trials + kBlock - 1) / kBlock;
  unsigned nthreads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::uint64_t>(nthreads, nblocks));

  std::vector<ExperimentCounts> partial(nthreads);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&](unsigned t) {
    ExperimentCounts &acc = partial[t];
    for (std::uint64_t b; (b = next.fetch_add(1)) < nblocks;) {
      std::uint64_t end = std::min(cfg.n_trials, (b + 1) * kBlock);
      for (std::uint64_t i = b * kBlock; i < end; ++i) {
        TrialRecord r = sim.run(i);
        ++acc.trials;
        if (r.photon_number_drawn > 0) ++acc.trials_with_photons;
        if (r.discarded) ++acc.discarded;
        if (!r.heralded) continue;
        ++(r.dark ? acc.dark_heralds : acc.true_heralds);
        acc.by_slot[static_cast<std::size_t>(make_slot(r.herald_outcome, r.dark))].add(r.analysis_basis,
                                                                                        r.outcome_up);
      }
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto &th : pool) th.join();
  }

  ExperimentResult res;
  res.input_label = cfg.input_label;
  for (const auto &p : partial) res.counts += p;
  if (res.counts.trials_with_photons > 0) {
    double n = static_cast<double>(res.counts.trials_with_photons);
    res.efficiency = static_cast<double>(res.counts.true_heralds) / n;
    res.efficiency_with_dark = static_cast<double>(res.counts.true_heralds + res.counts.dark_heralds) / n;
  }
  return res;
}

ExperimentResult run_storage_experiment(const ExperimentConfig &cfg) { return run_experiment(Scenario::Storage, cfg); }
ExperimentResult run_readout_experiment(const ExperimentConfig &cfg) { return run_experiment(Scenario::Readout, cfg); }

ExactHeralds exact_heralds(const PureState &atom0, const PhotonInstrument &inst, const ExperimentConfig &cfg) {
  const ErrorModel &e = cfg.errors;
  const double nbar = cfg.pulse.nbar;
  const Mat2c P[3] = {inst.mixed(Click::Down, e.mode_overlap), inst.mixed(Click::Up, e.mode_overlap),
                      inst.mixed(Click::None, e.mode_overlap)};
  const Mat2c rho0 = (1 - e.p_prep_error) * projector(atom0);
  const double leak0 = e.p_prep_error;
  const double pd = e.p_dark_per_window;

  ExactHeralds out;
  out.p_photon = -std::expm1(-nbar);
  double pn = std::exp(-nbar);
  double cumulative = 0;
  for (int n = 0; n < 150; ++n) {
    if (n > 0) pn *= nbar / n;
    cumulative += pn;
    std::array<ExactBranch, 4> here;
    // Multinomial weights built incrementally: n!/(kd! ku! kn!).
    double fact_n = std::tgamma(n + 1.0);
    for (int kd = 0; kd <= n; ++kd) {
      for (int ku = 0; ku + kd <= n; ++ku) {
        int kn = n - kd - ku;
        double mult = fact_n / (std::tgamma(kd + 1.0) * std::tgamma(ku + 1.0) * std::tgamma(kn + 1.0));
        Mat2c S = cwise_pow(P[0], kd).cwiseProduct(cwise_pow(P[1], ku)).cwiseProduct(cwise_pow(P[2], kn));
        Mat2c srho = S.cwiseProduct(rho0);
        double sleak = S(1, 1).real() * leak0;
        struct {
          int extra;
          bool up;
          double p;
        } darks[3] = {{0, false, 1 - pd}, {1, false, pd / 2}, {1, true, pd / 2}};
        for (const auto &d : darks) {
          int tot = kd + ku + d.extra;
          if (tot == 0 || d.p == 0) continue;
          double base = mult * d.p / tot;
          auto add = [&](HeraldSlot s, double count) {
            if (count == 0) return;
            ExactBranch &b = here[static_cast<std::size_t>(s)];
            b.rho += base * count * srho;
            b.leaked += base * count * sleak;
          };
          add(HeraldSlot::DownX, kd);
          add(HeraldSlot::UpX, ku);
          if (d.extra) add(d.up ? HeraldSlot::DarkUpX : HeraldSlot::DarkDownX, 1);
        }
      }
    }
    double keep = n >= 2 ? 1 - e.multiphoton_discard : 1.0;
    for (std::size_t s = 0; s < 4; ++s) {
      out.slots[s].rho += pn * keep * here[s].rho;
      out.slots[s].leaked += pn * keep * here[s].leaked;
      out.p_discarded += pn * (1 - keep) * here[s].weight();
    }
    // Remaining Poisson tail is below ~pn once n exceeds nbar.
    if (n > nbar && (pn < 1e-18 || 1 - cumulative < 1e-16)) break;
  }
  return out;
}

namespace {

ExactBranch merge(const ExactBranch &a, const ExactBranch &b) {
  return {a.rho + b.rho, a.leaked + b.leaked};
}

const ExactBranch &slot(const ExactHeralds &h, HeraldSlot s) { return h.slots[static_cast<std::size_t>(s)]; }

double branch_fidelity(const ExactBranch &b, const PureState &target) {
  double w = b.weight();
  if (!(w > 0)) return std::numeric_limits<double>::quiet_NaN();
  std::array<double, 3> p{};
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    double pu = (expectation(b.rho, basis_up(a)) + b.leaked) / w;
    p[static_cast<std::size_t>(a)] = std::clamp(pu, 0.0, 1.0);
  }
  return fidelity(reconstruct_from_probabilities(p).rho, target);
}

}  // namespace

StorageExpectation expected_storage(const ExperimentConfig &cfg) {
  cfg.validate();
  StorageExpectation out;
  auto states = mub_states();
  const Mat2c f = feedback_matrix(Herald::UpX);
  for (std::size_t k = 0; k < 6; ++k) {
    PhotonInstrument inst =
        photon_instrument(states[k], Axis::X, cfg.cavity, cfg.pulse, cfg.errors, cfg.ideal_gate, cfg.quad);
    ExactHeralds eh = exact_heralds(storage_initial_atom(), inst, cfg);
    ExactBranch down = merge(slot(eh, HeraldSlot::DownX), slot(eh, HeraldSlot::DarkDownX));
    ExactBranch up = merge(slot(eh, HeraldSlot::UpX), slot(eh, HeraldSlot::DarkUpX));
    up.rho = f * up.rho * f.adjoint();
    PureState target = transfer_target(states[k]);
    out.fidelity_down[k] = branch_fidelity(down, target);
    out.fidelity_up[k] = branch_fidelity(up, target);
    out.fidelity[k] = branch_fidelity(merge(down, up), target);
    if (eh.p_photon > 0) {
      double tru = slot(eh, HeraldSlot::DownX).weight() + slot(eh, HeraldSlot::UpX).weight();
      double drk = slot(eh, HeraldSlot::DarkDownX).weight() + slot(eh, HeraldSlot::DarkUpX).weight();
      out.efficiency += tru / eh.p_photon / 6;
      out.efficiency_with_dark += (tru + drk) / eh.p_photon / 6;
    }
  }
  for (std::size_t k = 0; k < 6; ++k) {
    out.average += out.fidelity[k] / 6;
    out.average_down += out.fidelity_down[k] / 6;
    out.average_up += out.fidelity_up[k] / 6;
  }
  return out;
}

ReadoutExpectation expected_readout(const ExperimentConfig &cfg) {
  cfg.validate();
  ReadoutExpectation out;
  auto states = mub_states();
  const PureState xd = basis_down(Axis::X), xu = basis_up(Axis::X);
  std::array<PhotonInstrument, 3> inst;
  for (Axis b : {Axis::X, Axis::Y, Axis::Z}) {
    inst[static_cast<std::size_t>(b)] =
        photon_instrument(xd, b, cfg.cavity, cfg.pulse, cfg.errors, cfg.ideal_gate, cfg.quad);
  }
  double w_down = 0, w_all = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    // acc[atom outcome: 0 down, 1 up][basis][photon outcome: 0 down, 1 up]
    double acc[2][3][2] = {};
    for (std::size_t b = 0; b < 3; ++b) {
      ExactHeralds eh = exact_heralds(states[k], inst[b], cfg);
      for (HeraldSlot s : kHeraldSlots) {
        const ExactBranch &br = slot(eh, s);
        int click_up = (s == HeraldSlot::UpX || s == HeraldSlot::DarkUpX) ? 1 : 0;
        acc[0][b][click_up] += expectation(br.rho, xd);
        acc[1][b][click_up] += expectation(br.rho, xu) + br.leaked;
      }
    }
    for (int a = 0; a < 2; ++a) {
      std::array<double, 3> p{};
      bool ok = true;
      for (std::size_t b = 0; b < 3; ++b) {
        double tot = acc[a][b][0] + acc[a][b][1];
        if (!(tot > 0)) ok = false;
        p[b] = ok ? std::clamp(acc[a][b][1] / tot, 0.0, 1.0) : 0.5;
        if (a == 0) w_down += tot;
        w_all += tot;
      }
      Herald h = a == 0 ? Herald::DownX : Herald::UpX;
      double fid = ok ? fidelity(reconstruct_from_probabilities(p).rho, readout_target(states[k], h))
                      : std::numeric_limits<double>::quiet_NaN();
      (a == 0 ? out.fidelity_down : out.fidelity_up)[k] = fid;
    }
  }
  for (std::size_t k = 0; k < 6; ++k) {
    out.average_down += out.fidelity_down[k] / 6;
    out.average_up += out.fidelity_up[k] / 6;
  }
  out.fraction_down = w_all > 0 ? w_down / w_all : std::numeric_limits<double>::quiet_NaN();
  return out;
}

namespace {

std::optional<TomographyResult> try_reconstruct(const CountsTable &t) {
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    if (t.total(a) == 0) return std::nullopt;
  }
  return reconstruct_state(t);
}

TomographyPipeline run_pipeline(Scenario scenario, const ExperimentConfig &cfg) {
  TomographyPipeline out;
  auto states = mub_states();
  auto labels = mub_labels();
  std::vector<PureState> inputs(states.begin(), states.end());
  std::vector<TomographyResult> combined;
  std::map<Herald, std::vector<TomographyResult>> by_herald;
  std::map<Herald, std::vector<PureState>> herald_targets;
  std::vector<PureState> targets;
  for (std::size_t k = 0; k < 6; ++k) {
    ExperimentConfig c = cfg;
    c.input_state = states[k];
    c.input_label = labels[k];
    c.seed = derive_key(cfg.seed, k);
    out.runs.push_back(run_experiment(scenario, c));
    const ExperimentResult &r = out.runs.back();
    out.efficiency += r.efficiency / 6;
    out.efficiency_with_dark += r.efficiency_with_dark / 6;
    if (scenario == Scenario::Storage) {
      if (auto t = try_reconstruct(r.counts.all(true))) combined.push_back(*t);
      targets.push_back(transfer_target(states[k]));
    }
    for (Herald h : {Herald::DownX, Herald::UpX}) {
      if (auto t = try_reconstruct(r.counts.table(h, true))) by_herald[h].push_back(*t);
      herald_targets[h].push_back(scenario == Scenario::Storage ? transfer_target(states[k])
                                                                : readout_target(states[k], h));
    }
  }
  for (Herald h : {Herald::DownX, Herald::UpX}) {
    if (by_herald[h].size() == 6) {
      out.by_herald[h] = characterize_process(inputs, by_herald[h], herald_targets[h]);
    }
  }
  if (scenario == Scenario::Storage) {
    if (combined.size() == 6) out.combined = characterize_process(inputs, combined, targets);
  } else if (out.by_herald.count(Herald::DownX)) {
    out.combined = out.by_herald[Herald::DownX];
  }
  return out;
}

}  // namespace

TomographyPipeline run_storage_pipeline(const ExperimentConfig &cfg) { return run_pipeline(Scenario::Storage, cfg); }
TomographyPipeline run_readout_pipeline(const ExperimentConfig &cfg) { return run_pipeline(Scenario::Readout, cfg); }

}  // namespace hstore
