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

#include <string>
#include <vector>

#include "qpsim/phasespace.hpp"
#include "qpsim/rational.hpp"

namespace qpsim {

/// Pauli coefficient vector of a unit-trace operator: x_b = Tr(T_b rho),
/// indexed by PauliPoint::key() over all of E. Exact when the state allows.
struct PauliVector {
  uint32_t n = 0;
  bool exact = false;
  std::vector<Rational> rx;  // when exact
  std::vector<double> fx;    // always

  static PauliVector from_exact(uint32_t n, std::vector<Rational> values);
  static PauliVector from_float(uint32_t n, std::vector<double> values);
  static PauliVector from_operator(const PhasePointOperator &op);
  size_t dim() const { return size_t(1) << (2 * n); }
};

struct QuasiDecomposition {
  bool feasible = false;
  bool exact = false;
  bool nonnegative = false;
  double one_norm = 0;
  Rational one_norm_exact;
  std::vector<std::pair<size_t, double>> weights;  // nonzero operator weights
  std::vector<std::pair<size_t, Rational>> weights_exact;
  std::vector<double> dual;  // optimal dual, or Farkas vector when infeasible
  std::vector<Rational> dual_exact;
  bool dual_certified = false;

  std::string to_records(const std::vector<PhasePointOperator> &ops) const;
};

struct DecomposeOptions {
  bool prefer_exact = true;
  size_t exact_max_columns = 256;  // exact simplex only below this many columns
  double tol = 1e-8;
};

/// Feasibility LP: W >= 0, sum W = 1 (via the identity row), sum W_a A_a = rho.
QuasiDecomposition decompose_nonnegative(const PauliVector &rho,
                                         const std::vector<PhasePointOperator> &ops,
                                         const DecomposeOptions &opts = {});

/// min ||W||_1 over affine decompositions; split-variable LP with a dual
/// certificate (|y.A_a| <= 1, y.rho = objective).
QuasiDecomposition robustness(const PauliVector &rho, const std::vector<PhasePointOperator> &ops,
                              const DecomposeOptions &opts = {});

/// Robustness with the stabilizer-projector generating set.
QuasiDecomposition robustness_of_magic(const PauliVector &rho, const DecomposeOptions &opts = {});

/// (||a-c||_2 + ||b-c||_2) / ||a-b||_2 for collinear a, b, c with c outside
/// the segment [a, b]; throws otherwise (collinearity tolerance 1e-9).
double two_point_negativity(const std::vector<double> &a, const std::vector<double> &b,
                            const std::vector<double> &c);

/// n(2n+1)/2 + 1.
Rational vertex_robustness_bound(uint32_t n);

/// The vertex-facet-origin collinear geometry of a pair-product vertex in
/// two normalizations: coordinates with nonzero entries of magnitude 1/2,
/// and Pauli coordinates x_b = Tr(T_b A) with entries of magnitude 1/n.
struct VertexGeometryReport {
  double half_ac, half_bc, half_ab, half_value;
  double pauli_ac, pauli_bc, pauli_ab, pauli_value;
};
VertexGeometryReport vertex_geometry_report(uint32_t n);

struct CountingBoundResult {
  double lhs;  // log2(2^n f(n,m))
  double rhs;  // stated lower bound
  double margin;
  bool holds;
  bool lhs_exceeds_2n;
};
CountingBoundResult counting_bound_check(uint32_t n, uint32_t m);

}  // namespace qpsim
