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

#ifndef HSTORE_CAVITY_H
#define HSTORE_CAVITY_H

#include <complex>
#include <optional>

namespace hstore {

/// Converts an ordinary frequency in MHz to an angular rate in rad/us.
inline double mhz(double f) { return 2.0 * 3.14159265358979323846 * f; }

/// Single-sided Fabry-Perot cavity with one two-level atom.
///
/// All rates and detunings are angular frequencies in rad/us (so 2*pi*MHz
/// values map to mhz(x)). Detunings are measured from the reference frequency
/// omega_0: delta_a = omega_a - omega_0 and delta_c = omega_c - omega_0.
struct CavityParams {
  double g = mhz(6.7);
  double kappa = mhz(2.5);
  double gamma = mhz(3.0);
  double t_coupling_ppm = 95.0;
  double loss_other_ppm = 8.0;
  double delta_a = 0.0;
  double delta_c = 0.0;
  /// Replaces the ppm-derived external decay rate when set.
  std::optional<double> kappa_ext_override;

  /// kappa * T / (T + L) unless overridden.
  double kappa_ext() const;
  double kappa_loss() const { return kappa - kappa_ext(); }
  /// Throws std::invalid_argument on non-physical parameters.
  void validate() const;
};

/// Amplitudes of the three output channels for a unit-amplitude input at
/// photon detuning delta = omega_p - omega_0.
///
/// With a = field inside the cavity and s = atomic coherence in steady state,
///   reflected   = 1 - sqrt(2 kappa_ext) a
///   mirror_loss = sqrt(2 kappa_loss) a
///   scattered   = sqrt(2 gamma) s
/// and |reflected|^2 + |mirror_loss|^2 + |scattered|^2 = 1.
struct CavityResponse {
  std::complex<double> reflected;
  std::complex<double> mirror_loss;
  std::complex<double> scattered;
};

CavityResponse cavity_response(const CavityParams &p, double delta, bool coupled);

/// r = 1 - 2 kappa_ext (i(delta_a - delta) + gamma) / [(i(delta_c - delta) + kappa)(i(delta_a - delta) + gamma) + g^2],
/// with g -> 0 for the uncoupled atomic state.
std::complex<double> reflection_amplitude(const CavityParams &p, double delta, bool coupled);

/// |r|^2.
double reflectivity(const CavityParams &p, double delta, bool coupled);

/// arg r_coupled - arg r_uncoupled, wrapped into (-pi, pi].
double phase_difference(const CavityParams &p, double delta);

/// Mean reflectivity over the four z-basis atom/photon combinations, of which
/// only up_a/up_p is coupled.
double average_reflectivity(const CavityParams &p, double delta);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

}  // namespace hstore

#endif
