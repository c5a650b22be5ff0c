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

#ifndef HSTORE_PROTOCOL_H
#define HSTORE_PROTOCOL_H

#include "hstore/qubit.h"
#include "hstore/rng.h"

namespace hstore {

/// Outcome of an x-basis measurement used as a herald.
enum class Herald { DownX, UpX };

const char *herald_name(Herald h);

struct Branch {
  PureState state;
  double probability = 0;
};

/// The two herald-keyed branches of a transfer. For storage the branch state
/// is the atom; for readout it is the photon.
struct HeraldedBranches {
  Branch down_x;
  Branch up_x;

  const Branch &operator[](Herald h) const { return h == Herald::DownX ? down_x : up_x; }
};

/// diag(+1, -1, -1, -1) in the ordered z(x)z basis.
JointState cz_gate(const JointState &state);
Eigen::Matrix4cd cz_matrix();

/// Initial atomic state of the storage scheme, R_y(-pi/2)|up_z> = |down_x>.
PureState storage_initial_atom();

/// Atom prepared in down_x, photon_in reflected (controlled-Z), photon then
/// projected onto down_x / up_x.
HeraldedBranches storage_map(const PureState &photon_in);

/// Photon prepared in down_x, reflected, atom projected onto down_x / up_x;
/// branches hold the resulting photon state.
HeraldedBranches readout_map(const PureState &atom_in);

/// Identity for down_x, R_x(pi) for up_x.
PureState apply_feedback(const PureState &atom, Herald herald);
DensityMatrix apply_feedback(const DensityMatrix &atom, Herald herald);
Mat2c feedback_matrix(Herald herald);

/// Born-rule sample of an x-basis measurement.
Herald measure_photon_x(const PureState &photon, CounterRng &rng);

/// alpha|down_x> + beta|up_x>  ->  alpha|down_z> + beta|up_z>. Maps a photonic
/// input to the atomic state it is stored as (and an atomic input to the
/// photonic state it is read out as).
PureState transfer_target(const PureState &input);

/// Expected photonic state after readout for the given atomic outcome:
/// transfer_target(atom) for down_x, R_x(pi) of it for up_x.
PureState readout_target(const PureState &atom_in, Herald outcome);

}  // namespace hstore

#endif
