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

#include "doctest.h"
#include "hstore/qubit.h"
#include "test_util.h"

using namespace hstore;
using hstore::testing::random_density;
using hstore::testing::random_state;

TEST_CASE("rotate_identity_and_preparation") {
  PureState up(1.0, 0.0);
  CHECK(testing::phase_free_distance(rotate(up, Axis::X, 0), up) < 1e-15);

  PureState prepared = rotate(up, Axis::Y, -kPi / 2);
  double s = 1 / std::sqrt(2.0);
  CHECK(std::abs(prepared.up() - cdouble(s)) < 1e-12);
  CHECK(std::abs(prepared.down() - cdouble(-s)) < 1e-12);
  CHECK(overlap(prepared, basis_down(Axis::X)) == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("rotate_x_pi_is_minus_i_sigma_x") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    PureState psi = random_state(rng);
    PureState out = rotate(psi, Axis::X, kPi);
    const cdouble i(0, 1);
    CHECK(std::abs(out.up() - (-i * psi.down())) < 1e-12);
    CHECK(std::abs(out.down() - (-i * psi.up())) < 1e-12);
  }
}

TEST_CASE("rotation_properties") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(-10, 10);
  for (int k = 0; k < 200; ++k) {
    Axis a = static_cast<Axis>(k % 3);
    double th = ang(rng);
    PureState psi = random_state(rng);
    PureState there = rotate(psi, a, th);
    CHECK(std::abs(there.amplitudes().norm() - 1) < 1e-12);
    PureState back = rotate(there, a, -th);
    CHECK((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);

    DensityMatrix rho = random_density(rng);
    DensityMatrix r2 = rotate(rho, a, th);
    CHECK(std::abs(r2.entries().trace().real() - 1) < 1e-12);
    CHECK(is_physical(r2.entries()));
    CHECK(std::abs(r2.purity() - rho.purity()) < 1e-12);

    // Fidelity invariant under joint rotation.
    CHECK(fidelity(r2, rotate(psi, a, th)) == doctest::Approx(fidelity(rho, psi)).epsilon(1e-12));
  }
}

TEST_CASE("double_x_pi_rotation") {
  PureState psi = PureState::normalized(Vec2c(cdouble(0.3, 0.1), cdouble(-0.5, 0.7)));
  PureState twice = rotate(rotate(psi, Axis::X, kPi), Axis::X, kPi);
  CHECK((twice.amplitudes() + psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  DensityMatrix rho = DensityMatrix::from_pure(psi);
  DensityMatrix r2 = rotate(rotate(rho, Axis::X, kPi), Axis::X, kPi);
  CHECK((r2.entries() - rho.entries()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("fidelity_examples") {
  DensityMatrix up = DensityMatrix::from_pure(basis_up(Axis::Z));
  CHECK(fidelity(up, basis_up(Axis::Z)) == doctest::Approx(1));
  CHECK(fidelity(DensityMatrix(), basis_up(Axis::Y)) == doctest::Approx(0.5));
  CHECK(fidelity(DensityMatrix::from_pure(basis_up(Axis::X)), basis_up(Axis::Z)) == doctest::Approx(0.5));
}

TEST_CASE("fidelity_is_linear") {
  std::mt19937_64 rng(3);
  DensityMatrix a = random_density(rng), b = random_density(rng);
  PureState t = random_state(rng);
  double p = 0.3;
  DensityMatrix mix(p * a.entries() + (1 - p) * b.entries());
  CHECK(fidelity(mix, t) == doctest::Approx(p * fidelity(a, t) + (1 - p) * fidelity(b, t)).epsilon(1e-12));
}

TEST_CASE("non_physical_density_rejected") {
  Mat2c m;
  m << 1.2, 0, 0, -0.2;
  CHECK_THROWS_AS(DensityMatrix{m}, std::invalid_argument);
  m << 0.5, 0.1, 0.2, 0.5;
  CHECK_THROWS_AS(DensityMatrix{m}, std::invalid_argument);
  m << 0.6, 0, 0, 0.6;
  CHECK_THROWS_AS(DensityMatrix{m}, std::invalid_argument);
  CHECK_THROWS_AS(PureState(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("mub_states") {
  auto s = mub_states();
  double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(s[3].up() - cdouble(r)) < 1e-15);
  CHECK(std::abs(s[3].down() - cdouble(-r)) < 1e-15);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      double o = overlap(s[a], s[b]);
      if (a == b) {
        CHECK(o == doctest::Approx(1));
      } else if (a / 2 == b / 2) {
        CHECK(o < 1e-15);
      } else {
        CHECK(o == doctest::Approx(0.5));
      }
    }
  }
  CHECK(mub_index("down_y") == 5);
  CHECK_THROWS(mub_index("sideways"));
}

TEST_CASE("bloch_round_trip") {
  BlochVector v = bloch_from_density(DensityMatrix());
  CHECK(v.norm() < 1e-15);
  v = bloch_from_pure(basis_up(Axis::Z));
  CHECK(v.z == doctest::Approx(1));
  v = bloch_from_pure(basis_up(Axis::Y));
  CHECK(v.x == doctest::Approx(0).epsilon(1e-15));
  CHECK(v.y == doctest::Approx(1));
  CHECK(v.z == doctest::Approx(0).epsilon(1e-15));

  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    DensityMatrix rho = random_density(rng);
    DensityMatrix back = density_from_bloch(bloch_from_density(rho));
    CHECK((back.entries() - rho.entries()).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(density_from_bloch({0.8, 0.8, 0}), std::invalid_argument);
}

TEST_CASE("joint_product_order") {
  JointState j = JointState::product(basis_up(Axis::Z), basis_down(Axis::Z));
  CHECK(std::abs(j.amplitudes()(1) - 1.0) < 1e-15);
  j = JointState::product(basis_down(Axis::Z), basis_up(Axis::Z));
  CHECK(std::abs(j.amplitudes()(2) - 1.0) < 1e-15);
}

TEST_CASE("trace_distance") {
  DensityMatrix a = DensityMatrix::from_pure(basis_up(Axis::Z));
  DensityMatrix b = DensityMatrix::from_pure(basis_down(Axis::Z));
  CHECK(trace_distance(a, b) == doctest::Approx(1));
  CHECK(trace_distance(a, DensityMatrix()) == doctest::Approx(0.5));
}
