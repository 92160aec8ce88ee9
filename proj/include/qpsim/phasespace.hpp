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

#include <optional>
#include <string>
#include <vector>

#include "qpsim/graphs.hpp"
#include "qpsim/pauli.hpp"
#include "qpsim/rational.hpp"
#include "qpsim/tableau.hpp"

namespace qpsim {

/// Phase-space point operator A = (1/2^n) sum_b c_b T_b with rational
/// coefficients, c_0 = 1. Terms are kept sorted with the identity first.
/// The optional constructive form records a core (+ coefficients) on the
/// first qubits, a stabilizer tail, and a Clifford conjugation.
struct PhasePointOperator {
  uint32_t n = 0;
  std::vector<std::pair<PauliPoint, Rational>> terms;

  struct Constructive {
    std::vector<std::pair<PauliPoint, Rational>> core;  // on full register
    std::vector<std::pair<PauliPoint, int>> tail;       // isotropic basis with signs, full register
    CliffordTableau g;
  };
  std::optional<Constructive> constructive;

  /// Sorts terms, checks c_0 = 1 and distinctness; throws otherwise.
  void normalize();
  Rational coefficient(const PauliPoint &p) const;
  std::vector<PauliPoint> support_star() const;  // nonidentity support
  std::string dedup_key() const;

  /// "n=<n>" header, then "coeff<TAB>pauli" lines, exact rationals.
  std::string to_text() const;
  static PhasePointOperator from_text(const std::string &text);

  /// When the constructive form is present, expand it and compare with terms.
  bool constructive_matches() const;
};

/// CNC label: a set Omega closed under inference together with a
/// noncontextual sign assignment gamma.
struct CncLabel {
  uint32_t n = 0;
  std::vector<PauliPoint> omega;  // includes 0
  std::vector<int> gamma;         // parallel to omega, gamma(0) = 0
};

/// Checks closure of omega under inference.
bool is_closed_under_inference(const std::vector<PauliPoint> &omega);

/// Solves for a noncontextual value assignment on a closed set (GF(2) linear
/// system); nullopt when none exists (e.g. a Mermin-square support).
std::optional<std::vector<int>> find_gamma(const std::vector<PauliPoint> &omega);

/// A_Omega^gamma = (1/2^n) sum (-1)^{gamma(b)} T_b. Validates the label.
PhasePointOperator make_cnc_operator(const CncLabel &label);

/// pair-product label: 2n+1 pairwise-anticommuting Hermitian Paulis and a sign
/// bit per pairwise product, products ordered by (i, j) lexicographic.
struct MajoranaPairLabel {
  uint32_t n = 0;
  std::vector<PhasedPauli> majoranas;
  uint64_t eta = 0;  // bit e = sign of the e-th edge product
};

/// Jordan-Wigner chain: N pairwise-anticommuting Hermitian Paulis on
/// ceil((N-1)/2) qubits (N/2 for even N).
std::vector<PhasedPauli> jordan_wigner_majoranas(uint32_t N);

/// Pairwise products +T_b (phase canonicalized to 0), (i,j) lexicographic.
/// Throws unless the inputs pairwise anticommute.
std::vector<PauliPoint> edge_products(const std::vector<PhasedPauli> &majoranas);

/// A_O^eta = (1/2^n)(1 + (1/n) sum (-1)^{eta(b)} T_b); validates the
/// support size and its frustration graph L(K_{2n+1}).
PhasePointOperator make_majorana_pair_operator(const MajoranaPairLabel &label);

/// Exact Tr(Pi_I^r A), combinatorial (I maximal isotropic).
Rational stabilizer_inner_product(const PhasePointOperator &a, const IsotropicSubspace &i);

/// Cached stabilizer projector families per qubit count.
const std::vector<IsotropicSubspace> &stabilizer_family(uint32_t n, uint32_t cap = 3);

struct MembershipResult {
  bool member = false;
  Rational min_inner_product;
  int minimizer = -1;  // index into stabilizer_family(n)
};
/// Lambda membership: min over all stabilizer projectors of Tr(Pi A) >= 0.
MembershipResult lambda_membership(const PhasePointOperator &a, bool parallel = true,
                                   uint32_t cap = 3);
MembershipResult lambda_membership_serial(const PhasePointOperator &a, uint32_t cap = 3);

struct VertexCheckResult {
  bool in_lambda = false;
  bool is_vertex = false;
  int orthogonal_count = 0;
  size_t rank = 0;
  size_t required_rank = 0;  // 4^n - 1
};
/// Collects stabilizer projectors orthogonal to A and ranks their Pauli
/// coefficient vectors (identity coordinate dropped): vertex iff 4^n - 1.
VertexCheckResult vertex_check(const PhasePointOperator &a, uint32_t cap = 3);

struct SignSearchResult {
  bool found = false;
  MajoranaPairLabel label;
  uint64_t tried = 0;
  uint64_t vertex_count = 0;  // populated by exhaustive scans
};
/// Searches eta making the pair-product operator a Lambda vertex. Exhaustive for
/// n <= 2 (also counts successes), randomized with early exit for larger n.
SignSearchResult find_vertex_signs(uint32_t n, bool exhaustive, uint64_t budget, uint64_t seed,
                                   bool parallel = true);
SignSearchResult find_vertex_signs_serial(uint32_t n, bool exhaustive, uint64_t budget,
                                          uint64_t seed);

/// f(n,m) = (2m)! (2n-2m)! (2n+1-2m) / (m! (n-m)! 2^n), exact.
BigInt f_counting(uint32_t n, uint32_t m);

struct ContainmentCount {
  BigInt count;
  uint32_t m = 0;  // half-length of the even factorization of a
};
/// Brute-force count of maximal isotropics I with |I cap O*| = n containing
/// a, where O* comes from the 2n+1 majoranas; n <= 3.
ContainmentCount count_isotropics_containing(const PauliPoint &a,
                                             const std::vector<PhasedPauli> &majoranas);

/// Inclusion bipartite graph: left = nonidentity Paulis, right = maximal
/// isotropics with |I cap O*| = n, edges by membership (all signs +).
SignedBipartiteGraph inclusion_bigraph(const std::vector<PhasedPauli> &majoranas);

/// Extreme points of {c : A_O^c in Lambda} over the affine slice with
/// support O (identity implicit), via exact double description over the
/// stabilizer inequality system plus the |c_b| <= 1 box.
std::vector<std::vector<Rational>> enumerate_projected_vertices(
    const std::vector<PauliPoint> &support_star, uint32_t n, size_t max_support = 12);

/// Maximal CNC labels (structured enumeration: isotropic subspace plus a
/// maximal pairwise-anticommuting family of cosets); n <= 2.
std::vector<std::vector<PauliPoint>> enumerate_maximal_cnc_sets(uint32_t n);

struct PhaseSpaceConfig {
  bool stabilizers = true;
  bool cnc_maximal = true;
  bool majorana_pairs = false;
  bool majorana_pairs_vertices_only = true;
  /// Supports whose projected-polytope extreme points join the set.
  std::vector<std::vector<PauliPoint>> projected_supports;
  uint64_t seed = 1;
};
/// Deduplicated generating set per the config. Full enumeration for n <= 2.
std::vector<PhasePointOperator> build_phase_space(uint32_t n, const PhaseSpaceConfig &config);

/// Conjugate a phase-space operator by a Clifford tableau.
PhasePointOperator clifford_conjugate(const PhasePointOperator &a, const CliffordTableau &g);

/// A (x) |sigma><sigma| for a stabilizer tail on extra qubits.
PhasePointOperator tensor_with_tail(const PhasePointOperator &a, const IsotropicSubspace &tail);

PhasePointOperator stabilizer_operator(const IsotropicSubspace &i);

}  // namespace qpsim
