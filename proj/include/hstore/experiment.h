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

#ifndef HSTORE_EXPERIMENT_H
#define HSTORE_EXPERIMENT_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hstore/instrument.h"
#include "hstore/protocol.h"
#include "hstore/tomography.h"

namespace hstore {

enum class Scenario { Storage, Readout };

/// Heralds are split by whether the selected click came from a photon or
/// from a dark count. Dark heralds are kept apart in the counts and merged
/// only when an analysis asks for it.
enum class HeraldSlot { DownX = 0, UpX = 1, DarkDownX = 2, DarkUpX = 3 };
inline constexpr std::array<HeraldSlot, 4> kHeraldSlots = {HeraldSlot::DownX, HeraldSlot::UpX, HeraldSlot::DarkDownX,
                                                          HeraldSlot::DarkUpX};
const char *slot_name(HeraldSlot s);
HeraldSlot make_slot(Herald h, bool dark);

inline constexpr double kStorageNbar = 0.09;
inline constexpr double kReadoutNbar = 0.08;

struct ExperimentConfig {
  std::uint64_t n_trials = 300000;
  std::uint64_t seed = 1;
  /// Photonic input for storage, atomic input for readout.
  PureState input_state;
  std::string input_label = "up_z";
  CavityParams cavity;
  GaussianPulse pulse;
  ErrorModel errors;
  /// Replace the cavity by a perfect lossless controlled-Z mirror.
  bool ideal_gate = false;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  Quadrature quad;

  void validate() const;
};

/// One repetition of the sequence.
struct TrialRecord {
  int photon_number_drawn = 0;
  int clicks = 0;
  bool leaked = false;
  bool heralded = false;
  /// The selected click was a dark count.
  bool dark = false;
  /// Herald from a multi-photon pulse rejected by the detection model.
  bool discarded = false;
  /// Storage: photonic x-basis herald. Readout: atomic x-basis outcome.
  Herald herald_outcome = Herald::DownX;
  Axis analysis_basis = Axis::X;
  /// Storage: atomic readout. Readout: photonic polarization outcome.
  bool outcome_up = false;
};

/// Aggregated outcome statistics of one configuration.
struct ExperimentCounts {
  std::array<CountsTable, 4> by_slot;
  std::uint64_t trials = 0;
  std::uint64_t trials_with_photons = 0;
  std::uint64_t true_heralds = 0;
  std::uint64_t dark_heralds = 0;
  std::uint64_t discarded = 0;

  CountsTable table(Herald h, bool include_dark = true) const;
  CountsTable all(bool include_dark = true) const;
  ExperimentCounts &operator+=(const ExperimentCounts &o);
  bool operator==(const ExperimentCounts &o) const = default;
};

struct ExperimentResult {
  std::string input_label;
  ExperimentCounts counts;
  /// Photon-originated heralds per trial with at least one photon.
  double efficiency = 0;
  /// Same, counting dark heralds too.
  double efficiency_with_dark = 0;

  std::vector<CountsRow> rows() const;
};

/// Precomputes the photon instruments of a configuration and simulates
/// single trials. Trial k draws from CounterRng(seed, k) only, so results
/// do not depend on scheduling.
class TrialSimulator {
 public:
  TrialSimulator(Scenario scenario, const ExperimentConfig &cfg);
  TrialRecord run(std::uint64_t trial_index) const;

 private:
  Scenario scenario_;
  ExperimentConfig cfg_;
  Mat2c rho0_;
  /// Storage uses index 0 (x basis); readout is indexed by analysis basis.
  std::array<PhotonInstrument, 3> inst_;
};

ExperimentResult run_storage_experiment(const ExperimentConfig &cfg);
ExperimentResult run_readout_experiment(const ExperimentConfig &cfg);
ExperimentResult run_experiment(Scenario scenario, const ExperimentConfig &cfg);

/// Analysis basis of trial k.
Axis analysis_basis_for_trial(std::uint64_t trial_index);

// Exact expectation values. The same model as the Monte Carlo, summed over
// photon numbers, outcome multiplicities and dark counts instead of sampled.

struct ExactBranch {
  /// Unnormalized atomic state restricted to the qubit subspace.
  Mat2c rho = Mat2c::Zero();
  /// Weight of the leaked (uncoupled, always "up") population.
  double leaked = 0;
  double weight() const { return rho.trace().real() + leaked; }
};

struct ExactHeralds {
  std::array<ExactBranch, 4> slots;
  /// P(n >= 1).
  double p_photon = 0;
  double p_discarded = 0;
};

/// Atom starting in atom0 (leaked with p_prep_error), one pulse with
/// Poisson photon number, outcome-resolved instrument inst.
ExactHeralds exact_heralds(const PureState &atom0, const PhotonInstrument &inst, const ExperimentConfig &cfg);

struct StorageExpectation {
  std::array<double, 6> fidelity{};
  std::array<double, 6> fidelity_down{};
  std::array<double, 6> fidelity_up{};
  double average = 0;
  double average_down = 0;
  double average_up = 0;
  /// MUB-averaged efficiency without and with dark heralds.
  double efficiency = 0;
  double efficiency_with_dark = 0;
};

struct ReadoutExpectation {
  std::array<double, 6> fidelity_down{};
  std::array<double, 6> fidelity_up{};
  double average_down = 0;
  double average_up = 0;
  /// Fraction of heralded trials with the atom found in down_x.
  double fraction_down = 0;
};

/// Mean over the six MUB inputs; cfg.input_state is ignored.
StorageExpectation expected_storage(const ExperimentConfig &cfg);
ReadoutExpectation expected_readout(const ExperimentConfig &cfg);

/// Full Monte Carlo plus tomography over the six MUB inputs.
struct TomographyPipeline {
  std::vector<ExperimentResult> runs;
  /// Dark heralds merged into the herald they fired, as an experiment would.
  ProcessResult combined;
  std::map<Herald, ProcessResult> by_herald;
  double efficiency = 0;
  double efficiency_with_dark = 0;
};

/// Input k uses seed derive_key(cfg.seed, k) and cfg.n_trials trials.
TomographyPipeline run_storage_pipeline(const ExperimentConfig &cfg);
/// by_herald holds the photon tomography per atomic outcome; combined is
/// not meaningful for readout and mirrors the down_x result.
TomographyPipeline run_readout_pipeline(const ExperimentConfig &cfg);

}  // namespace hstore

#endif
