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

#include "hstore/protocol.h"

#include <cmath>

namespace hstore {

const char *herald_name(Herald h) { return h == Herald::DownX ? "down_x" : "up_x"; }

Eigen::Matrix4cd cz_matrix() {
  Eigen::Matrix4cd m = -Eigen::Matrix4cd::Identity();
  m(0, 0) = 1.0;
  return m;
}

JointState cz_gate(const JointState &state) { return JointState(Vec4c(cz_matrix() * state.amplitudes())); }

PureState storage_initial_atom() { return rotate(PureState(1.0, 0.0), Axis::Y, -kPi / 2); }

namespace {

// Projects one subsystem of a joint state onto |h> and returns the
// unnormalized state of the other one.
Vec2c project_photon(const Vec4c &joint, const PureState &h) {
  const Vec2c &c = h.amplitudes();
  return {std::conj(c(0)) * joint(0) + std::conj(c(1)) * joint(1),
          std::conj(c(0)) * joint(2) + std::conj(c(1)) * joint(3)};
}

Vec2c project_atom(const Vec4c &joint, const PureState &h) {
  const Vec2c &c = h.amplitudes();
  return {std::conj(c(0)) * joint(0) + std::conj(c(1)) * joint(2),
          std::conj(c(0)) * joint(1) + std::conj(c(1)) * joint(3)};
}

Branch make_branch(const Vec2c &v) {
  double p = v.squaredNorm();
  return {PureState::normalized(v), p};
}

}  // namespace

HeraldedBranches storage_map(const PureState &photon_in) {
  JointState out = cz_gate(JointState::product(storage_initial_atom(), photon_in));
  return {make_branch(project_photon(out.amplitudes(), basis_down(Axis::X))),
          make_branch(project_photon(out.amplitudes(), basis_up(Axis::X)))};
}

HeraldedBranches readout_map(const PureState &atom_in) {
  JointState out = cz_gate(JointState::product(atom_in, basis_down(Axis::X)));
  return {make_branch(project_atom(out.amplitudes(), basis_down(Axis::X))),
          make_branch(project_atom(out.amplitudes(), basis_up(Axis::X)))};
}

Mat2c feedback_matrix(Herald herald) {
  return herald == Herald::UpX ? rotation_matrix(Axis::X, kPi) : Mat2c::Identity();
}

PureState apply_feedback(const PureState &atom, Herald herald) {
  return herald == Herald::UpX ? rotate(atom, Axis::X, kPi) : atom;
}

DensityMatrix apply_feedback(const DensityMatrix &atom, Herald herald) {
  return herald == Herald::UpX ? rotate(atom, Axis::X, kPi) : atom;
}

Herald measure_photon_x(const PureState &photon, CounterRng &rng) {
  double p_down = overlap(basis_down(Axis::X), photon);
  return rng.uniform() < p_down ? Herald::DownX : Herald::UpX;
}

PureState transfer_target(const PureState &input) {
  cdouble alpha = basis_down(Axis::X).amplitudes().dot(input.amplitudes());
  cdouble beta = basis_up(Axis::X).amplitudes().dot(input.amplitudes());
  return PureState::normalized(Vec2c(beta, alpha));
}

PureState readout_target(const PureState &atom_in, Herald outcome) {
  // Atom alpha|down_z> + beta|up_z> is read out as alpha|down_x> + beta|up_x>.
  Vec2c v = atom_in.down() * basis_down(Axis::X).amplitudes() + atom_in.up() * basis_up(Axis::X).amplitudes();
  PureState phi = PureState::normalized(v);
  return outcome == Herald::DownX ? phi : rotate(phi, Axis::X, kPi);
}

}  // namespace hstore
