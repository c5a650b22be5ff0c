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

#ifndef HSTORE_INSTRUMENT_H
#define HSTORE_INSTRUMENT_H

#include <array>

#include "hstore/cavity.h"
#include "hstore/pulse.h"
#include "hstore/qubit.h"

namespace hstore {

/// Imperfection channels of the experiment. The defaults are the calibrated
/// values (see calibrate_error_model); ErrorModel::none() switches every
/// channel off while keeping the detector efficiency.
struct ErrorModel {
  /// Fraction of the pulse in the cavity mode. The rest reflects off the
  /// bare mirror with unit amplitude and no atom-dependent phase.
  double mode_overlap = 0.92331;
  /// Probability that the atom ends up outside the qubit subspace. Such an
  /// atom does not couple and reads out as "up" in every analysis basis.
  double p_prep_error = 0.045024;
  /// Dark-count probability per detection window (uniformly random outcome).
  double p_dark_per_window = 7.887e-4;
  /// Leakage of the up port into the down port of the polarization analyser.
  double p_pol_optics = 0.021387;
  /// Relative phase between the circular components picked up in the cavity.
  double birefringence_phase = 0.24783;
  double detector_efficiency = 0.56;
  /// Probability that a herald from a pulse with two or more photons is
  /// rejected by the detection electronics. 1 removes all multi-photon
  /// heralds.
  double multiphoton_discard = 0.31113;

  /// All channels off; detector efficiency kept at its default.
  static ErrorModel none();
  /// Throws std::invalid_argument if a probability leaves [0,1] or a phase is not finite.
  void validate() const;
};

enum class Click { Down = 0, Up = 1, None = 2 };

/// Effect of one photon on the atom, resolved by detection outcome.
///
/// Every Kraus operator of the reflection is diagonal in the atomic z basis,
/// so the unnormalized post-measurement atomic state is the elementwise
/// (Schur) product matched[c] .* rho, and the outcome probability is the
/// diagonal part of that product traced. Index 0 is up_z, 1 is down_z.
/// Mismatched photons do not touch the atom, hence a scalar per outcome.
struct PhotonInstrument {
  std::array<Mat2c, 3> matched;
  std::array<double, 3> mismatched{};

  /// mode_overlap-weighted mixture of both parts.
  Mat2c mixed(Click c, double mode_overlap) const;
};

/// Photon in `photon` polarization, analysed in `basis` after reflection.
/// With ideal_gate the cavity is replaced by r = +1 (coupled) / -1
/// (uncoupled) with no loss and no spectral dependence.
PhotonInstrument photon_instrument(const PureState &photon, Axis basis, const CavityParams &cavity,
                                   const GaussianPulse &pulse, const ErrorModel &errors, bool ideal_gate,
                                   const Quadrature &quad = {});

/// Probability of outcome c for atom state rho (trace one) given the
/// matched-mode multiplier m.
double schur_probability(const Mat2c &m, const Mat2c &rho);

}  // namespace hstore

#endif
