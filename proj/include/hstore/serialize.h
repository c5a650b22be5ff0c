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

#ifndef HSTORE_SERIALIZE_H
#define HSTORE_SERIALIZE_H

#include "json.hpp"

#include "hstore/experiment.h"
#include "hstore/protocol.h"
#include "hstore/qubit.h"
#include "hstore/tomography.h"

namespace hstore {

/// Complex numbers are [re, im] pairs; Bloch vectors are [x, y, z].
nlohmann::json to_json(cdouble z);
nlohmann::json to_json(const PureState &s);
nlohmann::json to_json(const DensityMatrix &rho);
nlohmann::json to_json(const BlochVector &v);
nlohmann::json to_json(const HeraldedBranches &b);
nlohmann::json to_json(const TomographyResult &r);
nlohmann::json to_json(const ProcessResult &r);
nlohmann::json to_json(const ExperimentResult &r);

cdouble complex_from_json(const nlohmann::json &j);
PureState pure_state_from_json(const nlohmann::json &j);
DensityMatrix density_from_json(const nlohmann::json &j);
BlochVector bloch_from_json(const nlohmann::json &j);

/// Rounds to 12 significant digits so that reports are stable across
/// platforms; NaN becomes null.
nlohmann::json rounded(double v);

}  // namespace hstore

#endif
