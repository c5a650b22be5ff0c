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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hstore/protocol.h"
#include "test_util.h"

using namespace hstore;
using hstore::testing::phase_free_distance;
using hstore::testing::random_state;

namespace {

Vec4c kron(const PureState &atom, const PureState &photon) { return JointState::product(atom, photon).amplitudes(); }

Vec4c strip_phase(const Vec4c &v) {
  for (int k = 0; k < 4; ++k) {
    if (std::abs(v(k)) > 1e-9) return v * (std::conj(v(k)) / std::abs(v(k)));
  }
  return v;
}

// alpha |down_x> + beta |up_x> from the z-amplitudes (beta, alpha) of phi.
PureState as_x_state(cdouble alpha, cdouble beta) {
  return PureState::normalized(alpha * basis_down(Axis::X).amplitudes() + beta * basis_up(Axis::X).amplitudes());
}

}  // namespace

TEST_CASE("cz_examples") {
  JointState uu = JointState::product(basis_up(Axis::Z), basis_up(Axis::Z));
  CHECK((cz_gate(uu).amplitudes() - uu.amplitudes()).norm() < 1e-15);
  JointState dd = JointState::product(basis_down(Axis::Z), basis_down(Axis::Z));
  CHECK((cz_gate(dd).amplitudes() + dd.amplitudes()).norm() < 1e-15);
  std::mt19937_64 rng(1);
  JointState j = JointState::product(random_state(rng), random_state(rng));
  CHECK((cz_gate(cz_gate(j)).amplitudes() - j.amplitudes()).norm() < 1e-15);
  Eigen::Matrix4cd m = cz_matrix();
  CHECK((m * m.adjoint() - Eigen::Matrix4cd::Identity()).norm() < 1e-15);
  CHECK((m - m.adjoint()).norm() < 1e-15);
}

TEST_CASE("storage_examples") {
  HeraldedBranches b = storage_map(basis_down(Axis::X));
  CHECK(overlap(b.down_x.state, basis_down(Axis::Z)) == doctest::Approx(1).epsilon(1e-12));
  b = storage_map(basis_up(Axis::X));
  CHECK(overlap(b.down_x.state, basis_up(Axis::Z)) == doctest::Approx(1).epsilon(1e-12));
  CHECK(storage_initial_atom().down().real() < 0);
}

TEST_CASE("storage_equation_emerges") {
  std::mt19937_64 rng(2024);
  const cdouble i(0, 1);
  for (int k = 0; k < 1000; ++k) {
    PureState phi_a = random_state(rng);
    // phi_a = alpha |down_z> + beta |up_z>.
    cdouble alpha = phi_a.down(), beta = phi_a.up();
    PureState photon = as_x_state(alpha, beta);
    Vec4c lhs = cz_gate(JointState::product(storage_initial_atom(), photon)).amplitudes();
    Vec4c rhs = (kron(phi_a, basis_down(Axis::X)) + i * kron(rotate(phi_a, Axis::X, kPi), basis_up(Axis::X))) /
                std::sqrt(2.0);
    CHECK((strip_phase(lhs) - strip_phase(rhs)).cwiseAbs().maxCoeff() < 1e-12);

    HeraldedBranches b = storage_map(photon);
    CHECK(b.down_x.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b.up_x.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(phase_free_distance(b.down_x.state, phi_a) < 1e-12);
    CHECK(phase_free_distance(b.up_x.state, rotate(phi_a, Axis::X, kPi)) < 1e-12);
    CHECK(phase_free_distance(transfer_target(photon), phi_a) < 1e-12);
  }
}

TEST_CASE("feedback_recovers_input") {
  std::mt19937_64 rng(9);
  auto mub = mub_states();
  std::vector<PureState> inputs(mub.begin(), mub.end());
  for (int k = 0; k < 100; ++k) inputs.push_back(random_state(rng));
  for (const PureState &photon : inputs) {
    HeraldedBranches b = storage_map(photon);
    PureState target = transfer_target(photon);
    for (Herald h : {Herald::DownX, Herald::UpX}) {
      PureState fixed = apply_feedback(b[h].state, h);
      CHECK(overlap(fixed, target) == doctest::Approx(1).epsilon(1e-12));
      DensityMatrix rho = apply_feedback(DensityMatrix::from_pure(b[h].state), h);
      CHECK(fidelity(rho, target) == doctest::Approx(1).epsilon(1e-12));
    }
  }
  PureState up = basis_up(Axis::Z);
  CHECK(phase_free_distance(apply_feedback(up, Herald::DownX), up) < 1e-15);
  CHECK(overlap(apply_feedback(up, Herald::UpX), basis_down(Axis::Z)) == doctest::Approx(1));
}

TEST_CASE("readout_equation_emerges") {
  std::mt19937_64 rng(77);
  const cdouble i(0, 1);
  for (int k = 0; k < 1000; ++k) {
    PureState phi_a = random_state(rng);
    cdouble alpha = phi_a.down(), beta = phi_a.up();
    PureState phi_p = as_x_state(alpha, beta);
    Vec4c lhs = cz_gate(JointState::product(phi_a, basis_down(Axis::X))).amplitudes();
    Vec4c rhs = (kron(basis_down(Axis::X), phi_p) + i * kron(basis_up(Axis::X), rotate(phi_p, Axis::X, kPi))) /
                std::sqrt(2.0);
    CHECK((strip_phase(lhs) - strip_phase(rhs)).cwiseAbs().maxCoeff() < 1e-12);

    HeraldedBranches b = readout_map(phi_a);
    CHECK(b.down_x.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b.up_x.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(phase_free_distance(b.down_x.state, phi_p) < 1e-12);
    CHECK(phase_free_distance(b.up_x.state, rotate(phi_p, Axis::X, kPi)) < 1e-12);
    CHECK(phase_free_distance(readout_target(phi_a, Herald::DownX), phi_p) < 1e-12);
    CHECK(phase_free_distance(readout_target(phi_a, Herald::UpX), b.up_x.state) < 1e-12);
  }
  HeraldedBranches b = readout_map(basis_down(Axis::Z));
  CHECK(overlap(b.down_x.state, basis_down(Axis::X)) == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("storage_and_readout_are_dual") {
  // Storing photon psi gives atom transfer_target(psi); reading that atom
  // back out returns psi on the down_x branch.
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    PureState psi = random_state(rng);
    PureState atom = storage_map(psi).down_x.state;
    CHECK(phase_free_distance(readout_map(atom).down_x.state, psi) < 1e-12);
  }
}

TEST_CASE("measure_photon_x_statistics") {
  CounterRng rng(5, 0);
  for (int k = 0; k < 1000; ++k) CHECK(measure_photon_x(basis_down(Axis::X), rng) == Herald::DownX);
  for (double theta : {0.3, 1.1, 2.0}) {
    PureState psi = rotate(basis_down(Axis::X), Axis::Y, theta);
    double p = overlap(basis_down(Axis::X), psi);
    const int n = 100000;
    int hits = 0;
    for (int k = 0; k < n; ++k) hits += measure_photon_x(psi, rng) == Herald::DownX;
    double sigma = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(hits / double(n) - p) < 3 * sigma + 1e-12);
  }
  int hits = 0;
  for (int k = 0; k < 100000; ++k) hits += measure_photon_x(basis_up(Axis::Z), rng) == Herald::DownX;
  CHECK(std::abs(hits / 1e5 - 0.5) < 3 * std::sqrt(0.25 / 1e5));
}
