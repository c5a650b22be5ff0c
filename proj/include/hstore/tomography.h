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

#ifndef HSTORE_TOMOGRAPHY_H
#define HSTORE_TOMOGRAPHY_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hstore/protocol.h"
#include "hstore/qubit.h"

namespace hstore {

/// Outcome counts for measurements in the x, y and z bases.
class CountsTable {
 public:
  void add(Axis basis, bool up, std::uint64_t count = 1);
  std::uint64_t up(Axis basis) const { return n_[idx(basis)][0]; }
  std::uint64_t down(Axis basis) const { return n_[idx(basis)][1]; }
  std::uint64_t total(Axis basis) const { return up(basis) + down(basis); }
  std::uint64_t total() const;

  CountsTable &operator+=(const CountsTable &other);
  bool operator==(const CountsTable &other) const = default;

 private:
  static std::size_t idx(Axis a) { return static_cast<std::size_t>(a); }
  std::array<std::array<std::uint64_t, 2>, 3> n_{};
};

struct TomographyResult {
  /// Physical state after projection.
  DensityMatrix rho;
  /// Bloch vector of rho.
  BlochVector bloch;
  /// Linear-inversion estimate before projection, may be longer than 1.
  BlochVector raw_bloch;
  /// Binomial standard error per axis (x, y, z); zero for exact input.
  std::array<double, 3> std_errors{};
};

/// Linear inversion plus projection to the nearest physical state.
/// Throws std::invalid_argument if any basis has no counts.
TomographyResult reconstruct_state(const CountsTable &counts);

/// Same estimator fed with exact probabilities of the up outcome per basis.
TomographyResult reconstruct_from_probabilities(const std::array<double, 3> &p_up);

/// Nearest physical density matrix of a Hermitian unit-trace matrix:
/// negative eigenvalues are clipped and their weight redistributed.
DensityMatrix project_to_physical(const Mat2c &hermitian);

struct ProcessResult {
  /// Output Bloch vector = affine_map * input + offset.
  Eigen::Matrix3d affine_map;
  Eigen::Vector3d offset;
  double average_fidelity = 0;
  std::array<double, 6> per_input_fidelities{};
  /// Largest |affine_map v + offset| over a sample of the unit sphere.
  double max_mapped_norm = 0;
  /// Semi-axes of the image of the unit sphere, descending, and their directions.
  Eigen::Vector3d ellipsoid_axes;
  Eigen::Matrix3d ellipsoid_directions;
};

/// Least-squares affine Bloch map from six probe inputs to reconstructed
/// outputs. Fidelities are taken against `targets` (the ideal outputs),
/// which default to the inputs themselves. Throws if the input Bloch vectors
/// do not span three dimensions or the sizes differ from six.
ProcessResult characterize_process(const std::vector<PureState> &inputs, const std::vector<TomographyResult> &outputs,
                                   const std::vector<PureState> &targets = {});

struct HeraldFidelities {
  std::optional<double> down_x;
  std::optional<double> up_x;
};

/// Averages per-herald process fidelities; a herald with no data stays empty.
HeraldFidelities herald_conditioned_fidelities(const std::map<Herald, ProcessResult> &results);

/// One line of the counts CSV.
struct CountsRow {
  std::string input_state;
  std::string herald;
  Axis analysis_basis = Axis::Z;
  bool up = true;
  std::uint64_t count = 0;

  bool operator==(const CountsRow &) const = default;
};

/// Header: input_state,herald,analysis_basis,outcome,count.
void write_counts_csv(std::ostream &out, const std::vector<CountsRow> &rows);
std::vector<CountsRow> read_counts_csv(std::istream &in);

/// Sums rows for one input whose herald is in `heralds`.
CountsTable collect_counts(const std::vector<CountsRow> &rows, const std::string &input_state,
                           const std::vector<std::string> &heralds);

}  // namespace hstore

#endif
