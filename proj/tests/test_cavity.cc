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

#include "doctest.h"
#include "hstore/cavity.h"
#include "hstore/qubit.h"

using namespace hstore;

TEST_CASE("resonant_reflection_amplitudes") {
  CavityParams p;
  std::complex<double> ru = reflection_amplitude(p, 0, false);
  std::complex<double> rc = reflection_amplitude(p, 0, true);
  double ke = p.kappa * 95.0 / 103.0;
  CHECK(std::abs(ru - (1 - 2.0 * 95.0 / 103.0)) < 1e-12);
  CHECK(std::abs(rc - (1 - 2 * ke * p.gamma / (p.kappa * p.gamma + p.g * p.g))) < 1e-12);
  CHECK(ru.real() == doctest::Approx(-0.84466).epsilon(1e-4));
  CHECK(rc.real() == doctest::Approx(0.73592).epsilon(1e-4));
  CHECK(reflectivity(p, 0, false) == doctest::Approx(0.7135).epsilon(1e-3));
  CHECK(average_reflectivity(p, 0) == doctest::Approx(0.6705).epsilon(1e-3));
}

TEST_CASE("lossless_uncoupled_is_perfect_mirror") {
  CavityParams p;
  p.loss_other_ppm = 0;
  CHECK(std::abs(reflection_amplitude(p, 0, false) + 1.0) < 1e-12);
  for (double d = -50; d <= 50; d += 0.37) {
    CHECK(std::abs(std::abs(reflection_amplitude(p, d, false)) - 1) < 1e-12);
  }
}

TEST_CASE("passivity_and_energy_balance") {
  CavityParams p;
  for (double d = -100; d <= 100; d += 0.173) {
    for (bool c : {false, true}) {
      CavityResponse r = cavity_response(p, d, c);
      CHECK(std::abs(r.reflected) <= 1 + 1e-9);
      double total = std::norm(r.reflected) + std::norm(r.mirror_loss) + std::norm(r.scattered);
      CHECK(total == doctest::Approx(1).epsilon(1e-12));
    }
  }
}

TEST_CASE("far_detuned_limit") {
  CavityParams p;
  CHECK(reflectivity(p, 1e6, true) == doctest::Approx(1).epsilon(1e-6));
  CHECK(reflectivity(p, -1e6, true) == doctest::Approx(1).epsilon(1e-6));
  CHECK(std::abs(phase_difference(p, 10 * p.g)) < 0.05);
  CHECK(std::abs(phase_difference(p, 1e5)) < 1e-3);
}

TEST_CASE("phase_on_resonance_is_pi") {
  CavityParams p;
  CHECK(std::abs(phase_difference(p, 0) - kPi) < 1e-9);
}

TEST_CASE("phase_vanishes_without_coupling") {
  CavityParams p;
  p.g = 1e-9;
  for (double d = -40; d <= 40; d += 1.1) CHECK(std::abs(phase_difference(p, d)) < 1e-6);
}

TEST_CASE("phase_changes_within_tenth_of_g") {
  CavityParams p;
  double dev = std::abs(wrap_phase(phase_difference(p, 0.1 * p.g) - kPi));
  CHECK(dev > 0.3);
}

TEST_CASE("reflection_symmetry_at_zero_detunings") {
  CavityParams p;
  for (double d = 0.1; d < 80; d += 0.7) {
    for (bool c : {false, true}) {
      auto a = reflection_amplitude(p, d, c), b = reflection_amplitude(p, -d, c);
      CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-12));
      CHECK(a.imag() == doctest::Approx(-b.imag()).epsilon(1e-12));
    }
  }
}

TEST_CASE("wrap_phase_range") {
  CHECK(wrap_phase(kPi) == doctest::Approx(kPi));
  CHECK(wrap_phase(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_phase(3 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_phase(0.5) == doctest::Approx(0.5));
}

TEST_CASE("invalid_parameters") {
  CavityParams p;
  p.kappa = -1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = CavityParams{};
  p.t_coupling_ppm = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = CavityParams{};
  p.kappa_ext_override = 2 * p.kappa;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("kappa_ext_override") {
  CavityParams p;
  p.kappa_ext_override = p.kappa;
  CHECK(std::abs(reflection_amplitude(p, 0, false) + 1.0) < 1e-12);
}
