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

#ifndef HSTORE_ANALYSIS_H
#define HSTORE_ANALYSIS_H

#include <string>
#include <vector>

namespace hstore {

struct EfficiencyScenario {
  /// Photon generation efficiency of the remote source.
  double eta_gen = 0.6;
  double eta_det = 0.56;
  /// Mean cavity reflectivity.
  double R_avg = 0.69;

  void validate() const;
};

/// Linear-optics Bell-state measurement: eta_gen eta_det^2 / 2.
double bsm_efficiency(const EfficiencyScenario &s);
/// Heralded reflection storage: R eta_det.
double heralded_storage_efficiency(const EfficiencyScenario &s);
/// 2R / (eta_gen eta_det). +infinity when the denominator vanishes.
double advantage_ratio(const EfficiencyScenario &s);

enum class BoundVerdict { Exceeds, Boundary, Below };
const char *verdict_name(BoundVerdict v);

inline constexpr double kClassicalFidelityBound = 0.675;
/// The constant only holds near this operating point.
inline constexpr double kBoundNbar = 0.09;
inline constexpr double kBoundEfficiency = 0.39;
inline constexpr double kBoundNbarTolerance = 0.005;
inline constexpr double kBoundEfficiencyTolerance = 0.04;
inline constexpr double kBoundaryTolerance = 5e-4;

struct ClassicalBoundCheck {
  BoundVerdict verdict = BoundVerdict::Below;
  /// avg_fidelity - bound.
  double margin = 0;
  double bound = kClassicalFidelityBound;
};

/// Throws std::invalid_argument for a fidelity outside [0,1] and
/// std::domain_error for an operating point the constant does not cover.
ClassicalBoundCheck classical_bound_check(double avg_fidelity, double nbar = kBoundNbar,
                                          double efficiency = kBoundEfficiency);

struct BudgetItem {
  std::string name;
  double points = 0;
};

struct BudgetReport {
  std::vector<BudgetItem> items;
  double total = 0;
};

BudgetReport budget_report(const std::vector<BudgetItem> &items);

/// Reported storage budget lines in percentage points.
std::vector<BudgetItem> itemized_storage_budget();
inline constexpr double kStorageBudgetTotal = 12.0;
inline constexpr double kReadoutBudgetDownX = 11.0;
inline constexpr double kReadoutBudgetUpX = 14.0;

}  // namespace hstore

#endif
