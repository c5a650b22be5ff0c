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

#include "hstore/pulse.h"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace hstore {

void GaussianPulse::validate() const {
  if (!(fwhm_time > 0) || std::isnan(fwhm_time)) {
    throw std::invalid_argument("GaussianPulse: fwhm_time must be positive");
  }
  if (!(nbar >= 0) || !std::isfinite(nbar)) {
    throw std::invalid_argument("GaussianPulse: nbar must be non-negative");
  }
  if (!std::isfinite(carrier_detuning) || !std::isfinite(arrival_time)) {
    throw std::invalid_argument("GaussianPulse: carrier_detuning and arrival_time must be finite");
  }
}

double GaussianPulse::spectral_sigma() const {
  if (std::isinf(fwhm_time)) return 0.0;
  // Intensity exp(-t^2/s^2) with FWHM 2 s sqrt(ln2) has spectral intensity exp(-w^2 s^2).
  return std::sqrt(2.0 * std::log(2.0)) / fwhm_time;
}

SpectralGrid spectral_intensity(const GaussianPulse &pulse, const Quadrature &quad) {
  pulse.validate();
  if (quad.points < 3 || !(quad.span_sigma > 0)) {
    throw std::invalid_argument("spectral_intensity: need at least 3 points and a positive span");
  }
  SpectralGrid grid;
  double sigma = pulse.spectral_sigma();
  if (sigma == 0.0) {
    grid.detunings.push_back(pulse.carrier_detuning);
    grid.weights.push_back(1.0);
    return grid;
  }
  grid.detunings.reserve(quad.points);
  grid.weights.reserve(quad.points);
  double total = 0;
  for (int k = 0; k < quad.points; ++k) {
    double u = -quad.span_sigma + 2.0 * quad.span_sigma * k / (quad.points - 1);
    double w = std::exp(-0.5 * u * u);
    grid.detunings.push_back(pulse.carrier_detuning + u * sigma);
    grid.weights.push_back(w);
    total += w;
  }
  for (double &w : grid.weights) w /= total;
  return grid;
}

ReflectedPolarization reflected_polarization_state(const GaussianPulse &pulse, const CavityParams &params,
                                                   const PureState &input_pol, bool atom_coupled,
                                                   const Quadrature &quad) {
  params.validate();
  SpectralGrid grid = spectral_intensity(pulse, quad);
  Mat2c acc = Mat2c::Zero();
  for (std::size_t k = 0; k < grid.weights.size(); ++k) {
    double delta = grid.detunings[k];
    // Envelope centred at arrival_time contributes a common spectral phase.
    cdouble amp = std::sqrt(grid.weights[k]) * std::polar(1.0, delta * pulse.arrival_time);
    cdouble ru = reflection_amplitude(params, delta, false);
    cdouble rup = atom_coupled ? reflection_amplitude(params, delta, true) : ru;
    Vec2c v(amp * rup * input_pol.up(), amp * ru * input_pol.down());
    acc += v * v.adjoint();
  }
  double p = acc.trace().real();
  if (!(p > 0)) {
    return {DensityMatrix(), 0.0};
  }
  Mat2c rho = acc / p;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return {DensityMatrix(rho), p};
}

double conditional_flip_probability(const GaussianPulse &pulse, const CavityParams &params,
                                    const Quadrature &quad) {
  auto out = reflected_polarization_state(pulse, params, basis_down(Axis::X), true, quad);
  return fidelity(out.rho, basis_up(Axis::X));
}

std::vector<CurvePoint> flip_probability_curve(const CavityParams &params, const std::vector<double> &fwhm_values,
                                               double eta_max, const GaussianPulse &base,
                                               const Quadrature &quad) {
  if (!(eta_max >= 0 && eta_max <= 1)) {
    throw std::invalid_argument("flip_probability_curve: eta_max must lie in [0, 1]");
  }
  std::vector<CurvePoint> out;
  out.reserve(fwhm_values.size());
  for (double fwhm : fwhm_values) {
    GaussianPulse pulse = base;
    pulse.fwhm_time = fwhm;
    out.push_back({fwhm, eta_max * conditional_flip_probability(pulse, params, quad)});
  }
  return out;
}

namespace {

CavityParams with_overrides(const CavityParams &params, const DetuningOverrides &o) {
  CavityParams p = params;
  if (o.delta_a) p.delta_a = *o.delta_a;
  if (o.delta_c) p.delta_c = *o.delta_c;
  return p;
}

}  // namespace

PhaseCurve phase_curve(const CavityParams &params, const std::vector<double> &delta_over_g,
                       const DetuningOverrides &overrides) {
  CavityParams p = with_overrides(params, overrides);
  p.validate();
  PhaseCurve curve;
  curve.wrapped.reserve(delta_over_g.size());
  curve.unwrapped.reserve(delta_over_g.size());
  double prev = 0;
  for (std::size_t k = 0; k < delta_over_g.size(); ++k) {
    double x = delta_over_g[k];
    double phase = phase_difference(p, x * params.g);
    curve.wrapped.push_back({x, phase});
    double cont = phase;
    if (k > 0) cont = prev + wrap_phase(phase - prev);
    curve.unwrapped.push_back({x, cont});
    prev = cont;
  }
  return curve;
}

double max_phase_deviation(const CavityParams &params, const DetuningOverrides &overrides, double half_range_over_g,
                           int points) {
  CavityParams shifted = with_overrides(params, overrides);
  double worst = 0;
  for (double x : linspace(-half_range_over_g, half_range_over_g, points)) {
    double delta = x * params.g;
    double d = wrap_phase(phase_difference(shifted, delta) - phase_difference(params, delta));
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) return {};
  if (n == 1) return {lo};
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = lo + (hi - lo) * k / (n - 1);
  return v;
}

void write_curve_csv(std::ostream &out, const std::vector<CurvePoint> &points) {
  out << "x,y\n";
  char buf[64];
  for (const auto &pt : points) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", pt.x, pt.y);
    out << buf;
  }
}

}  // namespace hstore
