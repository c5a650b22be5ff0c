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

#include "hstore/serialize.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace hstore {

using nlohmann::json;

json rounded(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

json to_json(cdouble z) { return json::array({rounded(z.real()), rounded(z.imag())}); }

json to_json(const PureState &s) { return json::array({to_json(s.up()), to_json(s.down())}); }

json to_json(const DensityMatrix &rho) {
  const Mat2c &m = rho.entries();
  return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

json to_json(const BlochVector &v) { return json::array({rounded(v.x), rounded(v.y), rounded(v.z)}); }

json to_json(const HeraldedBranches &b) {
  return {{"down_x", {{"state", to_json(b.down_x.state.phase_normalized())}, {"probability", rounded(b.down_x.probability)}}},
          {"up_x", {{"state", to_json(b.up_x.state.phase_normalized())}, {"probability", rounded(b.up_x.probability)}}}};
}

json to_json(const TomographyResult &r) {
  return {{"rho", to_json(r.rho)},
          {"bloch", to_json(r.bloch)},
          {"raw_bloch", to_json(r.raw_bloch)},
          {"std_errors", json::array({rounded(r.std_errors[0]), rounded(r.std_errors[1]), rounded(r.std_errors[2])})}};
}

json to_json(const ProcessResult &r) {
  json m = json::array();
  json dirs = json::array();
  for (int i = 0; i < 3; ++i) {
    m.push_back(json::array({rounded(r.affine_map(i, 0)), rounded(r.affine_map(i, 1)), rounded(r.affine_map(i, 2))}));
    dirs.push_back(json::array({rounded(r.ellipsoid_directions(0, i)), rounded(r.ellipsoid_directions(1, i)),
                                rounded(r.ellipsoid_directions(2, i))}));
  }
  json per = json::object();
  auto labels = mub_labels();
  for (std::size_t k = 0; k < 6; ++k) per[labels[k]] = rounded(r.per_input_fidelities[k]);
  return {{"affine_map", m},
          {"offset", json::array({rounded(r.offset(0)), rounded(r.offset(1)), rounded(r.offset(2))})},
          {"average_fidelity", rounded(r.average_fidelity)},
          {"per_input_fidelities", per},
          {"max_mapped_norm", rounded(r.max_mapped_norm)},
          {"ellipsoid_axes",
           json::array({rounded(r.ellipsoid_axes(0)), rounded(r.ellipsoid_axes(1)), rounded(r.ellipsoid_axes(2))})},
          {"ellipsoid_directions", dirs}};
}

json to_json(const ExperimentResult &r) {
  const ExperimentCounts &c = r.counts;
  return {{"input_state", r.input_label},
          {"trials", c.trials},
          {"trials_with_photons", c.trials_with_photons},
          {"true_heralds", c.true_heralds},
          {"dark_heralds", c.dark_heralds},
          {"discarded_multiphoton", c.discarded},
          {"efficiency", rounded(r.efficiency)},
          {"efficiency_with_dark", rounded(r.efficiency_with_dark)}};
}

cdouble complex_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

PureState pure_state_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected two amplitudes");
  // Written amplitudes are rounded, so renormalize anything close to unit norm.
  Vec2c v(complex_from_json(j[0]), complex_from_json(j[1]));
  if (std::abs(v.squaredNorm() - 1) > 1e-8) throw std::invalid_argument("state amplitudes not normalized");
  return PureState::normalized(v);
}

DensityMatrix density_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    throw std::invalid_argument("expected a 2x2 matrix");
  }
  Mat2c m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return DensityMatrix(m);
}

BlochVector bloch_from_json(const json &j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected [x, y, z]");
  BlochVector v{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  if (v.norm() > 1 + 1e-10) throw std::invalid_argument("Bloch vector longer than 1");
  return v;
}

}  // namespace hstore
