// Copyright 2026 The qpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qpsim/oracle.hpp"
#include "qpsim/simulate.hpp"

namespace qpsim {

struct ExactBranch {
  Transcript transcript;
  double probability = 0;
  QSqrt2 exact_probability;  // valid when `exact`
  bool exact = false;
};

/// Exhaustive branch tree with Born-rule probabilities; conditional gates
/// honored. Caps: measurement count <= 20, n <= 8. Probabilities sum to 1
/// (exactly on the exact path, 1e-12 on the float path).
std::vector<ExactBranch> exact_distribution(const DenseOperator &rho, const Circuit &circuit);

/// Density operator of the circuit's `state` lines (unassigned qubits |0>).
DenseOperator dense_state_of_circuit(const Circuit &circuit);

/// Dense reconstruction of a canonical simulator state.
DenseOperator reconstruct_state(const CanonicalState &state);

/// Dense reconstruction of a phase-space operator.
DenseOperator reconstruct_operator(const PhasePointOperator &op);

/// Total variation distance between an empirical distribution and the exact
/// one (keys = transcript_key).
double total_variation(const DistributionEstimate &emp, const std::vector<ExactBranch> &exact);

}  // namespace qpsim
