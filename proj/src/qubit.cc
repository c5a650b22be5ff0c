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

#include "hstore/qubit.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hstore {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kEigTol = 1e-10;
const cdouble kI(0.0, 1.0);

}  // namespace

Axis parse_axis(std::string_view name) {
  if (name == "x" || name == "X") return Axis::X;
  if (name == "y" || name == "Y") return Axis::Y;
  if (name == "z" || name == "Z") return Axis::Z;
  throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

const char *axis_name(Axis axis) {
  switch (axis) {
    case Axis::X:
      return "x";
    case Axis::Y:
      return "y";
    case Axis::Z:
      return "z";
  }
  return "?";
}

PureState::PureState() : amp_(1.0, 0.0) {}

PureState::PureState(cdouble up, cdouble down) : PureState(Vec2c(up, down)) {}

PureState::PureState(const Vec2c &amplitudes) : amp_(amplitudes) {
  double n = amp_.squaredNorm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTol) {
    throw std::invalid_argument("PureState: amplitudes not normalized (norm^2 = " + std::to_string(n) + ")");
  }
}

PureState PureState::normalized(const Vec2c &v) {
  double n = v.norm();
  if (!(n > 0) || !std::isfinite(n)) {
    throw std::invalid_argument("PureState::normalized: zero or non-finite vector");
  }
  return PureState(Vec2c(v / n));
}

PureState PureState::phase_normalized() const {
  for (int k = 0; k < 2; ++k) {
    if (std::abs(amp_(k)) > 1e-14) {
      cdouble phase = std::conj(amp_(k)) / std::abs(amp_(k));
      Vec2c v = amp_ * phase;
      v(k) = std::abs(amp_(k));
      return PureState(v);
    }
  }
  return *this;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::operator[](Axis axis) const {
  switch (axis) {
    case Axis::X:
      return x;
    case Axis::Y:
      return y;
    case Axis::Z:
      return z;
  }
  return 0;
}

DensityMatrix::DensityMatrix() : rho_(Mat2c::Identity() * 0.5) {}

DensityMatrix::DensityMatrix(const Mat2c &entries) : rho_(entries) {
  if (!is_physical(rho_, kEigTol)) {
    throw std::invalid_argument("DensityMatrix: entries are not a physical qubit state");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
  const Vec2c &a = psi.amplitudes();
  return DensityMatrix(Mat2c(a * a.adjoint()));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

bool is_physical(const Mat2c &rho, double tol) {
  if (!rho.allFinite()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kNormTol) return false;
  if (std::abs(rho.trace() - 1.0) > kNormTol) return false;
  // For a Hermitian 2x2 matrix the smaller eigenvalue is t/2 - sqrt((a-d)^2/4 + |b|^2).
  double a = rho(0, 0).real();
  double d = rho(1, 1).real();
  double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
  return 0.5 * (a + d) - r >= -tol;
}

JointState::JointState(const Vec4c &amplitudes) : amp_(amplitudes) {
  double n = amp_.squaredNorm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTol) {
    throw std::invalid_argument("JointState: amplitudes not normalized");
  }
}

JointState JointState::product(const PureState &atom, const PureState &photon) {
  Vec4c v;
  v << atom.up() * photon.up(), atom.up() * photon.down(), atom.down() * photon.up(),
      atom.down() * photon.down();
  return JointState(v);
}

Mat2c pauli(Axis axis) {
  Mat2c m;
  switch (axis) {
    case Axis::X:
      m << 0, 1, 1, 0;
      break;
    case Axis::Y:
      m << 0, -kI, kI, 0;
      break;
    case Axis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Mat2c rotation_matrix(Axis axis, double angle) {
  // sigma^2 = 1, so the exponential is cos - i sin sigma.
  return Mat2c::Identity() * std::cos(0.5 * angle) - kI * std::sin(0.5 * angle) * pauli(axis);
}

PureState rotate(const PureState &psi, Axis axis, double angle) {
  Vec2c v = rotation_matrix(axis, angle) * psi.amplitudes();
  // Unitary up to rounding; renormalize so repeated rotations never drift out of tolerance.
  return PureState::normalized(v);
}

DensityMatrix rotate(const DensityMatrix &rho, Axis axis, double angle) {
  Mat2c u = rotation_matrix(axis, angle);
  Mat2c out = u * rho.entries() * u.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(out);
}

double fidelity(const DensityMatrix &rho, const PureState &target) {
  const Vec2c &t = target.amplitudes();
  return (t.adjoint() * rho.entries() * t)(0, 0).real();
}

double overlap(const PureState &a, const PureState &b) { return std::norm(a.amplitudes().dot(b.amplitudes())); }

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
  // Difference of two qubit states is traceless Hermitian with eigenvalues +-|dv|/2.
  BlochVector va = bloch_from_density(a);
  BlochVector vb = bloch_from_density(b);
  Eigen::Vector3d d = va.to_eigen() - vb.to_eigen();
  return 0.5 * d.norm();
}

PureState basis_up(Axis axis) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (axis) {
    case Axis::X:
      return PureState(s, s);
    case Axis::Y:
      return PureState(s, kI * s);
    case Axis::Z:
      return PureState(1.0, 0.0);
  }
  return PureState();
}

PureState basis_down(Axis axis) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (axis) {
    case Axis::X:
      return PureState(s, -s);
    case Axis::Y:
      return PureState(s, -kI * s);
    case Axis::Z:
      return PureState(0.0, 1.0);
  }
  return PureState();
}

std::array<PureState, 6> mub_states() {
  return {basis_up(Axis::Z), basis_down(Axis::Z), basis_up(Axis::X),
          basis_down(Axis::X), basis_up(Axis::Y), basis_down(Axis::Y)};
}

std::array<const char *, 6> mub_labels() { return {"up_z", "down_z", "up_x", "down_x", "up_y", "down_y"}; }

std::size_t mub_index(std::string_view label) {
  auto labels = mub_labels();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (label == labels[k]) return k;
  }
  throw std::invalid_argument("unknown MUB state label '" + std::string(label) + "'");
}

BlochVector bloch_from_density(const DensityMatrix &rho) {
  const Mat2c &m = rho.entries();
  return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix density_from_bloch(const BlochVector &v) {
  if (!(v.norm() <= 1.0 + kEigTol)) {
    throw std::invalid_argument("density_from_bloch: Bloch vector longer than 1");
  }
  Mat2c m = 0.5 * (Mat2c::Identity() + v.x * pauli(Axis::X) + v.y * pauli(Axis::Y) + v.z * pauli(Axis::Z));
  return DensityMatrix(m);
}

BlochVector bloch_from_pure(const PureState &psi) { return bloch_from_density(DensityMatrix::from_pure(psi)); }

}  // namespace hstore
