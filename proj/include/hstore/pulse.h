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

#ifndef HSTORE_PULSE_H
#define HSTORE_PULSE_H

#include <iosfwd>
#include <optional>
#include <vector>

#include "hstore/cavity.h"
#include "hstore/qubit.h"

namespace hstore {

/// Weak coherent pulse with a Gaussian temporal intensity envelope.
struct GaussianPulse {
  /// FWHM of the intensity envelope in us. +infinity means monochromatic.
  double fwhm_time = 0.6;
  /// Carrier detuning from omega_0 in rad/us.
  double carrier_detuning = 0.0;
  double nbar = 0.09;
  /// Centre of the envelope in us. Only enters as a spectral phase.
  double arrival_time = 0.0;

  void validate() const;
  /// Standard deviation of the spectral intensity in rad/us (0 if monochromatic).
  double spectral_sigma() const;
};

/// Discretized normalized spectral intensity.
struct SpectralGrid {
  std::vector<double> detunings;
  std::vector<double> weights;
};

struct Quadrature {
  /// Number of grid points (>= 3).
  int points = 401;
  /// Half-width of the grid in spectral standard deviations.
  double span_sigma = 8.0;
};

/// Uniform-grid discretization of the Gaussian spectrum; FWHM_nu * FWHM_t = 2 ln2 / pi.
SpectralGrid spectral_intensity(const GaussianPulse &pulse, const Quadrature &quad = {});

struct ReflectedPolarization {
  /// Polarization state conditioned on reflection, traced over frequency.
  DensityMatrix rho;
  /// Probability that the photon is reflected at all.
  double detection_probability = 0;
};

/// Reflects each spectral component; the up_z (right-circular) component picks
/// up r_coupled when the atom is in the coupled state, everything else r_uncoupled.
ReflectedPolarization reflected_polarization_state(const GaussianPulse &pulse, const CavityParams &params,
                                                   const PureState &input_pol, bool atom_coupled,
                                                   const Quadrature &quad = {});

/// Probability of finding an input down_x photon in up_x after reflection with
/// the atom coupled, conditioned on reflection.
double conditional_flip_probability(const GaussianPulse &pulse, const CavityParams &params,
                                    const Quadrature &quad = {});

struct CurvePoint {
  double x = 0;
  double y = 0;
};

inline constexpr double kDefaultFlipPlateau = 0.83;

/// (fwhm in us, eta_max * conditional flip probability).
std::vector<CurvePoint> flip_probability_curve(const CavityParams &params, const std::vector<double> &fwhm_values,
                                               double eta_max = kDefaultFlipPlateau,
                                               const GaussianPulse &base = {}, const Quadrature &quad = {});

struct DetuningOverrides {
  std::optional<double> delta_a;
  std::optional<double> delta_c;
};

struct PhaseCurve {
  /// x = delta / g, y = wrapped phase in (-pi, pi].
  std::vector<CurvePoint> wrapped;
  /// Same x with the phase continued across branch cuts.
  std::vector<CurvePoint> unwrapped;
};

/// Coupled/uncoupled phase difference at photon detunings delta = x * g.
PhaseCurve phase_curve(const CavityParams &params, const std::vector<double> &delta_over_g,
                       const DetuningOverrides &overrides = {});

/// max |wrap(phase_overridden - phase_resonant)| over |delta| <= half_range_over_g * g.
double max_phase_deviation(const CavityParams &params, const DetuningOverrides &overrides,
                           double half_range_over_g = 0.1, int points = 2001);

/// Evenly spaced values including both ends.
std::vector<double> linspace(double lo, double hi, int n);

/// Writes "x,y" header and one row per point.
void write_curve_csv(std::ostream &out, const std::vector<CurvePoint> &points);

}  // namespace hstore

#endif
