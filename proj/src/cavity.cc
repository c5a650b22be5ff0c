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

#include "hstore/cavity.h"

#include <cmath>
#include <stdexcept>

namespace hstore {

namespace {

using cd = std::complex<double>;
constexpr double kPiLocal = 3.14159265358979323846;

}  // namespace

double CavityParams::kappa_ext() const {
  if (kappa_ext_override) return *kappa_ext_override;
  return kappa * t_coupling_ppm / (t_coupling_ppm + loss_other_ppm);
}

void CavityParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(g > 0) || !(kappa > 0) || !(gamma > 0) || !finite(g) || !finite(kappa) || !finite(gamma)) {
    throw std::invalid_argument("CavityParams: rates g, kappa, gamma must be positive and finite");
  }
  if (!(t_coupling_ppm > 0 && t_coupling_ppm < 1e6) || !(loss_other_ppm >= 0 && loss_other_ppm < 1e6)) {
    throw std::invalid_argument("CavityParams: mirror budgets must lie in (0, 1e6) ppm");
  }
  if (!finite(delta_a) || !finite(delta_c)) {
    throw std::invalid_argument("CavityParams: detunings must be finite");
  }
  double ke = kappa_ext();
  if (!(ke > 0) || ke > kappa * (1 + 1e-12)) {
    throw std::invalid_argument("CavityParams: kappa_ext must lie in (0, kappa]");
  }
}

CavityResponse cavity_response(const CavityParams &p, double delta, bool coupled) {
  const cd i(0.0, 1.0);
  const double g = coupled ? p.g : 0.0;
  const double ke = p.kappa_ext();
  const double kl = std::max(0.0, p.kappa - ke);
  const cd atom = i * (p.delta_a - delta) + p.gamma;
  const cd cav = i * (p.delta_c - delta) + p.kappa;
  const cd denom = cav * atom + g * g;
  // Intracavity field and atomic coherence per unit input amplitude.
  const cd field = std::sqrt(2.0 * ke) * atom / denom;
  const cd coherence = -i * g * field / atom;
  return {1.0 - std::sqrt(2.0 * ke) * field, std::sqrt(2.0 * kl) * field, std::sqrt(2.0 * p.gamma) * coherence};
}

std::complex<double> reflection_amplitude(const CavityParams &p, double delta, bool coupled) {
  return cavity_response(p, delta, coupled).reflected;
}

double reflectivity(const CavityParams &p, double delta, bool coupled) {
  return std::norm(reflection_amplitude(p, delta, coupled));
}

double wrap_phase(double angle) {
  double w = std::remainder(angle, 2.0 * kPiLocal);
  if (w <= -kPiLocal) w += 2.0 * kPiLocal;
  return w;
}

double phase_difference(const CavityParams &p, double delta) {
  cd rc = reflection_amplitude(p, delta, true);
  cd ru = reflection_amplitude(p, delta, false);
  // arg(rc / ru) is the wrapped difference and avoids branch-cut arithmetic.
  return wrap_phase(std::arg(rc * std::conj(ru)));
}

double average_reflectivity(const CavityParams &p, double delta) {
  return 0.25 * (3.0 * reflectivity(p, delta, false) + reflectivity(p, delta, true));
}

}  // namespace hstore
