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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpsim/decompose.hpp"
#include "qpsim/pauli.hpp"
#include "qpsim/phasespace.hpp"
#include "qpsim/rng.hpp"
#include "qpsim/tableau.hpp"

namespace qpsim {

/// Circuit over Clifford gates (optionally conditioned on an earlier outcome
/// label) and Hermitian Pauli measurements.
struct Circuit {
  struct Gate {
    std::string name;
    std::vector<uint32_t> qubits;
    std::string condition;  // empty = unconditional; else an earlier label
  };
  struct Measurement {
    PhasedPauli target;  // Hermitian
    std::string label;
  };
  using Element = std::variant<Gate, Measurement>;

  uint32_t n = 0;
  std::vector<std::pair<std::string, std::vector<uint32_t>>> state_spec;  // name, qubits
  std::vector<Element> elements;

  std::vector<std::string> measurement_labels() const;
  void validate() const;

  /// Line format: `qubits <n>`; `state <name> <qubit...>`;
  /// `gate <NAME> <qubit...> [if <label>]`; `measure <pauli> -> <label>`.
  static Circuit parse(const std::string &text);
  std::string to_text() const;
};

/// The simulator's evolving state: an isotropic measurement record and a
/// line-graph core of canonical coset representatives commuting with it.
/// Reconstruction: Pi_record (sum_j c_j T_j) / 2^{n-k}, trace 1 (c_0 = 1).
class CanonicalState {
 public:
  CanonicalState(uint32_t n, IsotropicSubspace record,
                 std::vector<std::pair<PauliPoint, Rational>> core);
  static CanonicalState from_operator(const PhasePointOperator &op);

  uint32_t num_qubits() const { return n_; }
  const IsotropicSubspace &record() const { return record_; }
  const std::vector<std::pair<PauliPoint, Rational>> &core() const { return core_; }

  /// Flat Pauli coefficient x_p = Tr(T_p rho) of the reconstruction.
  Rational coefficient_of(const PauliPoint &p) const;

  /// Expanded flat term list (point, coefficient) of the reconstruction,
  /// scaled so that rho = (1/2^n) sum c_b T_b.
  std::vector<std::pair<PauliPoint, Rational>> expanded_terms() const;

  void apply_clifford(const CliffordTableau &g);

  /// Probability of outcome s for the Hermitian measurement target; the
  /// caller draws s. Throws on probability-zero forced outcomes.
  Rational outcome_probability(const PhasedPauli &target, int s) const;

  /// Projects onto outcome s and renormalizes; returns the probability.
  Rational measure_update(const PhasedPauli &target, int s);

  /// Core frustration-graph closure check (line graph up to twin classes).
  bool core_is_line_graph() const;

 private:
  void canonicalize();
  uint32_t n_;
  IsotropicSubspace record_;
  std::vector<std::pair<PauliPoint, Rational>> core_;  // sorted, identity first
};

/// One transcript entry per measurement, in circuit order.
using Transcript = std::vector<std::pair<std::string, int>>;

std::string transcript_key(const Transcript &t);

/// One pass of the sampling simulation: draw an initial operator from the
/// nonnegative decomposition, walk the circuit, return the outcome record.
Transcript simulate_run(const std::vector<PhasePointOperator> &ops,
                        const std::vector<Rational> &weights, const Circuit &circuit,
                        uint64_t master_seed, uint64_t shot_index);

struct DistributionEstimate {
  uint64_t shots = 0;
  std::map<std::string, uint64_t> counts;
  std::map<std::string, double> frequency;
  std::map<std::string, double> std_error;  // binomial
};

/// `shots` independent runs; OpenMP over shots with per-shot streams, or the
/// serial reference. Transcripts are identical across the two paths.
DistributionEstimate estimate_distribution(const std::vector<PhasePointOperator> &ops,
                                           const std::vector<Rational> &weights,
                                           const Circuit &circuit, uint64_t shots,
                                           uint64_t master_seed);
DistributionEstimate estimate_distribution_serial(const std::vector<PhasePointOperator> &ops,
                                                  const std::vector<Rational> &weights,
                                                  const Circuit &circuit, uint64_t shots,
                                                  uint64_t master_seed);

struct QuasiEstimate {
  double estimate = 0;
  double std_error = 0;
  double one_norm = 0;
  uint64_t shots = 0;
};

/// Importance sampling over |W|/||W||_1 with sign tracking: unbiased
/// estimator of the probability of the target outcome string.
QuasiEstimate quasi_estimate(const std::vector<PhasePointOperator> &ops,
                             const std::vector<double> &signed_weights, const Circuit &circuit,
                             const Transcript &target_outcome, uint64_t shots,
                             uint64_t master_seed);

}  // namespace qpsim
