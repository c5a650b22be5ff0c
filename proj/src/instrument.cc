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

#include "hstore/instrument.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hstore {

ErrorModel ErrorModel::none() {
  ErrorModel e;
  e.mode_overlap = 1.0;
  e.p_prep_error = 0;
  e.p_dark_per_window = 0;
  e.p_pol_optics = 0;
  e.birefringence_phase = 0;
  e.multiphoton_discard = 1.0;
  return e;
}

void ErrorModel::validate() const {
  auto prob = [](double v, const char *name) {
    if (!(v >= 0 && v <= 1)) throw std::invalid_argument(std::string("ErrorModel: ") + name + " must lie in [0,1]");
  };
  prob(mode_overlap, "mode_overlap");
  prob(p_prep_error, "p_prep_error");
  prob(p_dark_per_window, "p_dark_per_window");
  prob(p_pol_optics, "p_pol_optics");
  prob(detector_efficiency, "detector_efficiency");
  prob(multiphoton_discard, "multiphoton_discard");
  if (!std::isfinite(birefringence_phase)) throw std::invalid_argument("ErrorModel: birefringence_phase must be finite");
}

Mat2c PhotonInstrument::mixed(Click c, double mode_overlap) const {
  auto i = static_cast<std::size_t>(c);
  return mode_overlap * matched[i] + (1 - mode_overlap) * mismatched[i] * Mat2c::Ones();
}

double schur_probability(const Mat2c &m, const Mat2c &rho) {
  return (m(0, 0) * rho(0, 0) + m(1, 1) * rho(1, 1)).real();
}

PhotonInstrument photon_instrument(const PureState &photon, Axis basis, const CavityParams &cavity,
                                   const GaussianPulse &pulse, const ErrorModel &errors, bool ideal_gate,
                                   const Quadrature &quad) {
  errors.validate();
  cavity.validate();
  const double eta = errors.detector_efficiency;
  const double eps = errors.p_pol_optics;
  const Vec2c &psi = photon.amplitudes();
  const Vec2c bu = basis_up(basis).amplitudes();
  const Vec2c bd = basis_down(basis).amplitudes();
  const Mat2c bire = rotation_matrix(Axis::Z, errors.birefringence_phase);

  SpectralGrid grid;
  if (ideal_gate) {
    grid.detunings = {0.0};
    grid.weights = {1.0};
  } else {
    grid = spectral_intensity(pulse, quad);
  }

  PhotonInstrument inst;
  for (auto &m : inst.matched) m.setZero();

  for (std::size_t k = 0; k < grid.weights.size(); ++k) {
    const double w = grid.weights[k];
    CavityResponse c{1.0, 0.0, 0.0}, u{-1.0, 0.0, 0.0};
    if (!ideal_gate) {
      c = cavity_response(cavity, grid.detunings[k], true);
      u = cavity_response(cavity, grid.detunings[k], false);
    }
    // [atom][photon] amplitudes; only up_a with up_p sees the coupled response.
    const CavityResponse resp[2][2] = {{c, u}, {u, u}};
    Vec2c v[2];
    for (int i = 0; i < 2; ++i) {
      v[i] = bire * Vec2c(resp[i][0].reflected * psi(0), resp[i][1].reflected * psi(1));
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        cdouble di = bd.dot(v[i]), dj = bd.dot(v[j]);
        cdouble ui = bu.dot(v[i]), uj = bu.dot(v[j]);
        // Crosstalk sends a fraction eps of the up port to the down detector.
        inst.matched[0](i, j) += w * eta * (di * std::conj(dj) + eps * ui * std::conj(uj));
        inst.matched[1](i, j) += w * eta * (1 - eps) * ui * std::conj(uj);
        cdouble none = (1 - eta) * v[j].dot(v[i]);
        for (int p = 0; p < 2; ++p) {
          double pp = std::norm(psi(p));
          none += pp * (resp[i][p].mirror_loss * std::conj(resp[j][p].mirror_loss) +
                        resp[i][p].scattered * std::conj(resp[j][p].scattered));
        }
        inst.matched[2](i, j) += w * none;
      }
    }
  }

  double pu = std::norm(bu.dot(psi));
  double pd = std::norm(bd.dot(psi));
  inst.mismatched[0] = eta * (pd + eps * pu);
  inst.mismatched[1] = eta * (1 - eps) * pu;
  inst.mismatched[2] = 1 - inst.mismatched[0] - inst.mismatched[1];
  return inst;
}

}  // namespace hstore
