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

#include "hstore/tomography.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hstore {

void CountsTable::add(Axis basis, bool up, std::uint64_t count) { n_[idx(basis)][up ? 0 : 1] += count; }

std::uint64_t CountsTable::total() const {
  std::uint64_t t = 0;
  for (const auto &b : n_) t += b[0] + b[1];
  return t;
}

CountsTable &CountsTable::operator+=(const CountsTable &other) {
  for (std::size_t a = 0; a < 3; ++a) {
    n_[a][0] += other.n_[a][0];
    n_[a][1] += other.n_[a][1];
  }
  return *this;
}

DensityMatrix project_to_physical(const Mat2c &hermitian) {
  Mat2c h = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat2c> es(h);
  Eigen::Vector2d lam = es.eigenvalues();  // ascending
  // Clip negative eigenvalues and spread the deficit over the rest, as in the
  // usual most-likely-physical-state construction.
  double trace = lam.sum();
  Eigen::Vector2d out = lam;
  if (lam(0) < 0) {
    out(0) = 0;
    out(1) = trace;
  }
  out /= out.sum();
  Mat2c rho = es.eigenvectors() * out.cast<cdouble>().asDiagonal() * es.eigenvectors().adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

namespace {

TomographyResult from_raw(const Eigen::Vector3d &v, const std::array<double, 3> &errs) {
  Mat2c m = 0.5 * (Mat2c::Identity() + v(0) * pauli(Axis::X) + v(1) * pauli(Axis::Y) + v(2) * pauli(Axis::Z));
  DensityMatrix rho = project_to_physical(m);
  return {rho, bloch_from_density(rho), BlochVector::from_eigen(v), errs};
}

}  // namespace

TomographyResult reconstruct_state(const CountsTable &counts) {
  Eigen::Vector3d v;
  std::array<double, 3> errs{};
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    std::uint64_t n = counts.total(a);
    if (n == 0) throw std::invalid_argument(std::string("reconstruct_state: no counts in basis ") + axis_name(a));
    double vi = (static_cast<double>(counts.up(a)) - static_cast<double>(counts.down(a))) / static_cast<double>(n);
    auto i = static_cast<std::size_t>(a);
    v(static_cast<Eigen::Index>(i)) = vi;
    errs[i] = std::sqrt(std::max(0.0, 1.0 - vi * vi) / static_cast<double>(n));
  }
  return from_raw(v, errs);
}

TomographyResult reconstruct_from_probabilities(const std::array<double, 3> &p_up) {
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) {
    if (!(p_up[i] >= 0 && p_up[i] <= 1)) throw std::invalid_argument("reconstruct_from_probabilities: p outside [0,1]");
    v(i) = 2 * p_up[i] - 1;
  }
  return from_raw(v, {0, 0, 0});
}

ProcessResult characterize_process(const std::vector<PureState> &inputs, const std::vector<TomographyResult> &outputs,
                                   const std::vector<PureState> &targets) {
  if (inputs.size() != 6 || outputs.size() != 6) {
    throw std::invalid_argument("characterize_process: need six inputs and six outputs");
  }
  if (!targets.empty() && targets.size() != 6) throw std::invalid_argument("characterize_process: need six targets");

  Eigen::Matrix<double, 6, 4> design;
  Eigen::Matrix<double, 6, 3> rhs;
  for (int k = 0; k < 6; ++k) {
    design.row(k) << bloch_from_pure(inputs[k]).to_eigen().transpose(), 1.0;
    rhs.row(k) = outputs[k].bloch.to_eigen().transpose();
  }
  Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 6, 4>> qr(design);
  qr.setThreshold(1e-9);
  if (qr.rank() < 4) throw std::invalid_argument("characterize_process: probe states do not span the Bloch ball");
  Eigen::Matrix<double, 4, 3> sol = qr.solve(rhs);

  ProcessResult r;
  r.affine_map = sol.topRows<3>().transpose();
  r.offset = sol.row(3).transpose();

  double total = 0;
  for (int k = 0; k < 6; ++k) {
    const PureState &t = targets.empty() ? inputs[k] : targets[k];
    r.per_input_fidelities[k] = fidelity(outputs[k].rho, t);
    total += r.per_input_fidelities[k];
  }
  r.average_fidelity = total / 6;

  // Fibonacci sphere sample.
  const int n = 2000;
  double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / n;
    double rad = std::sqrt(1.0 - z * z);
    Eigen::Vector3d v(rad * std::cos(golden * i), rad * std::sin(golden * i), z);
    r.max_mapped_norm = std::max(r.max_mapped_norm, (r.affine_map * v + r.offset).norm());
  }

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(r.affine_map, Eigen::ComputeFullU);
  r.ellipsoid_axes = svd.singularValues();
  r.ellipsoid_directions = svd.matrixU();
  return r;
}

HeraldFidelities herald_conditioned_fidelities(const std::map<Herald, ProcessResult> &results) {
  HeraldFidelities out;
  if (auto it = results.find(Herald::DownX); it != results.end()) out.down_x = it->second.average_fidelity;
  if (auto it = results.find(Herald::UpX); it != results.end()) out.up_x = it->second.average_fidelity;
  return out;
}

void write_counts_csv(std::ostream &out, const std::vector<CountsRow> &rows) {
  out << "input_state,herald,analysis_basis,outcome,count\n";
  for (const auto &r : rows) {
    out << r.input_state << ',' << r.herald << ',' << axis_name(r.analysis_basis) << ',' << (r.up ? "up" : "down")
        << ',' << r.count << '\n';
  }
}

std::vector<CountsRow> read_counts_csv(std::istream &in) {
  std::vector<CountsRow> rows;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("counts csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "input_state,herald,analysis_basis,outcome,count") {
    throw std::invalid_argument("counts csv: unexpected header '" + line + "'");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 5) throw std::invalid_argument("counts csv: line " + std::to_string(lineno) + " needs 5 fields");
    CountsRow r;
    r.input_state = f[0];
    r.herald = f[1];
    r.analysis_basis = parse_axis(f[2]);
    if (f[3] == "up") {
      r.up = true;
    } else if (f[3] == "down") {
      r.up = false;
    } else {
      throw std::invalid_argument("counts csv: line " + std::to_string(lineno) + " outcome must be up or down");
    }
    std::size_t used = 0;
    try {
      r.count = std::stoull(f[4], &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != f[4].size() || f[4].empty() || f[4][0] == '-') {
      throw std::invalid_argument("counts csv: line " + std::to_string(lineno) + " bad count");
    }
    rows.push_back(r);
  }
  return rows;
}

CountsTable collect_counts(const std::vector<CountsRow> &rows, const std::string &input_state,
                           const std::vector<std::string> &heralds) {
  CountsTable t;
  for (const auto &r : rows) {
    if (r.input_state != input_state) continue;
    if (std::find(heralds.begin(), heralds.end(), r.herald) == heralds.end()) continue;
    t.add(r.analysis_basis, r.up, r.count);
  }
  return t;
}

}  // namespace hstore
