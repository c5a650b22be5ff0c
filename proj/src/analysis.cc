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

#include "hstore/analysis.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hstore {

void EfficiencyScenario::validate() const {
  for (double v : {eta_gen, eta_det, R_avg}) {
    if (!(v >= 0 && v <= 1)) throw std::invalid_argument("EfficiencyScenario: values must lie in [0,1]");
  }
}

double bsm_efficiency(const EfficiencyScenario &s) {
  s.validate();
  return 0.5 * s.eta_gen * s.eta_det * s.eta_det;
}

double heralded_storage_efficiency(const EfficiencyScenario &s) {
  s.validate();
  return s.R_avg * s.eta_det;
}

double advantage_ratio(const EfficiencyScenario &s) {
  s.validate();
  double den = s.eta_gen * s.eta_det;
  if (den == 0) return std::numeric_limits<double>::infinity();
  return 2.0 * s.R_avg / den;
}

const char *verdict_name(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::Exceeds:
      return "exceeds";
    case BoundVerdict::Boundary:
      return "boundary";
    case BoundVerdict::Below:
      return "below";
  }
  return "?";
}

ClassicalBoundCheck classical_bound_check(double avg_fidelity, double nbar, double efficiency) {
  if (!(avg_fidelity >= 0 && avg_fidelity <= 1)) {
    throw std::invalid_argument("classical_bound_check: fidelity must lie in [0,1]");
  }
  if (!(std::abs(nbar - kBoundNbar) <= kBoundNbarTolerance) ||
      !(std::abs(efficiency - kBoundEfficiency) <= kBoundEfficiencyTolerance)) {
    throw std::domain_error("classical_bound_check: the 0.675 bound is only known for nbar = 0.09 and efficiency 0.39");
  }
  ClassicalBoundCheck c;
  c.margin = avg_fidelity - c.bound;
  if (std::abs(c.margin) <= kBoundaryTolerance) {
    c.verdict = BoundVerdict::Boundary;
  } else {
    c.verdict = c.margin > 0 ? BoundVerdict::Exceeds : BoundVerdict::Below;
  }
  return c;
}

BudgetReport budget_report(const std::vector<BudgetItem> &items) {
  BudgetReport r;
  r.items = items;
  for (const auto &i : items) r.total += i.points;
  return r;
}

std::vector<BudgetItem> itemized_storage_budget() {
  return {{"mode_overlap", 5.5}, {"prep_error", 2.3}, {"dark_counts", 1.2},
          {"pol_optics", 0.7},   {"two_photon", 1.2}, {"birefringence", 1.0}};
}

}  // namespace hstore
