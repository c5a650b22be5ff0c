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

#ifndef HSTORE_QUBIT_H
#define HSTORE_QUBIT_H

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace hstore {

using cdouble = std::complex<double>;
using Vec2c = Eigen::Vector2cd;
using Mat2c = Eigen::Matrix2cd;
using Vec4c = Eigen::Vector4cd;

inline constexpr double kPi = 3.14159265358979323846;

enum class Axis { X, Y, Z };

/// Parses "x", "y" or "z".
Axis parse_axis(std::string_view name);
const char *axis_name(Axis axis);

/// Pure single-qubit state in the ordered basis (|up_z>, |down_z>).
///
/// For the photon, |up_z> is right-circular polarization (the component that
/// couples to the atom); for the atom it is the coupled hyperfine state.
class PureState {
 public:
  /// Normalized |up_z>.
  PureState();
  /// Throws std::invalid_argument unless |up|^2 + |down|^2 = 1 within 1e-12.
  PureState(cdouble up, cdouble down);
  explicit PureState(const Vec2c &amplitudes);

  /// Rescales an arbitrary nonzero vector to unit norm.
  static PureState normalized(const Vec2c &v);

  const Vec2c &amplitudes() const { return amp_; }
  cdouble up() const { return amp_(0); }
  cdouble down() const { return amp_(1); }

  /// Copy with the global phase fixed so the first nonzero amplitude is real
  /// and positive.
  PureState phase_normalized() const;

 private:
  Vec2c amp_;
};

struct BlochVector {
  double x = 0;
  double y = 0;
  double z = 0;

  double norm() const;
  double operator[](Axis axis) const;
  Eigen::Vector3d to_eigen() const { return {x, y, z}; }
  static BlochVector from_eigen(const Eigen::Vector3d &v) { return {v(0), v(1), v(2)}; }
};

class DensityMatrix {
 public:
  /// Maximally mixed state.
  DensityMatrix();
  /// Validates hermiticity, unit trace (both to 1e-12) and eigenvalues >= -1e-10.
  explicit DensityMatrix(const Mat2c &entries);
  static DensityMatrix from_pure(const PureState &psi);

  const Mat2c &entries() const { return rho_; }
  double purity() const;

 private:
  Mat2c rho_;
};

/// Two-qubit pure state ordered (up_a up_p, up_a down_p, down_a up_p, down_a down_p).
class JointState {
 public:
  explicit JointState(const Vec4c &amplitudes);
  static JointState product(const PureState &atom, const PureState &photon);
  const Vec4c &amplitudes() const { return amp_; }

 private:
  Vec4c amp_;
};

/// Pauli matrix for the given axis.
Mat2c pauli(Axis axis);
/// exp(-i angle sigma_axis / 2).
Mat2c rotation_matrix(Axis axis, double angle);

PureState rotate(const PureState &psi, Axis axis, double angle);
DensityMatrix rotate(const DensityMatrix &rho, Axis axis, double angle);

/// <phi|rho|phi>.
double fidelity(const DensityMatrix &rho, const PureState &target);
/// |<a|b>|^2.
double overlap(const PureState &a, const PureState &b);
/// Half the trace norm of the difference.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// up_z, down_z, up_x, down_x, up_y, down_y.
std::array<PureState, 6> mub_states();
/// Short labels matching mub_states(): "up_z", "down_z", ...
std::array<const char *, 6> mub_labels();
/// Index into mub_states() for a label, or throws std::invalid_argument.
std::size_t mub_index(std::string_view label);

/// The +1 (up) and -1 (down) eigenstates of sigma_axis.
PureState basis_up(Axis axis);
PureState basis_down(Axis axis);

BlochVector bloch_from_density(const DensityMatrix &rho);
/// Throws std::invalid_argument if |v| > 1 + 1e-10.
DensityMatrix density_from_bloch(const BlochVector &v);
BlochVector bloch_from_pure(const PureState &psi);

/// Checks the density-matrix invariants without throwing.
bool is_physical(const Mat2c &rho, double tol = 1e-10);

}  // namespace hstore

#endif
