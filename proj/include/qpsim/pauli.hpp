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

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qpsim {

/// A point a = (a_z, a_x) of the binary-symplectic space E = Z_2^{2n}.
/// Bit k of z/x is the Z/X component on qubit k. Qubit counts up to 32 are
/// supported so a point also packs into a single 64-bit key.
struct PauliPoint {
  uint32_t n = 0;
  uint64_t z = 0;
  uint64_t x = 0;

  PauliPoint() = default;
  PauliPoint(uint32_t n_, uint64_t z_, uint64_t x_) : n(n_), z(z_), x(x_) {}

  static PauliPoint zero(uint32_t n) { return PauliPoint(n, 0, 0); }

  bool is_zero() const { return z == 0 && x == 0; }

  uint64_t key() const { return (z << n) | x; }

  friend PauliPoint operator^(const PauliPoint &a, const PauliPoint &b) {
    return PauliPoint(a.n, a.z ^ b.z, a.x ^ b.x);
  }
  friend bool operator==(const PauliPoint &a, const PauliPoint &b) {
    return a.n == b.n && a.z == b.z && a.x == b.x;
  }
  friend bool operator!=(const PauliPoint &a, const PauliPoint &b) { return !(a == b); }
  friend bool operator<(const PauliPoint &a, const PauliPoint &b) {
    if (a.z != b.z) return a.z < b.z;
    return a.x < b.x;
  }
};

struct PauliPointHash {
  size_t operator()(const PauliPoint &p) const {
    return std::hash<uint64_t>()(p.z * 0x9E3779B97F4A7C15ull ^ p.x);
  }
};

/// Symplectic product [a,b] = <a_z|b_x> + <a_x|b_z> mod 2; 0 iff T_a, T_b commute.
int symplectic(const PauliPoint &a, const PauliPoint &b);

/// Phase exponent k mod 4 with T_a T_b = i^k T_{a+b}.
int phase_of_product(const PauliPoint &a, const PauliPoint &b);

/// beta(a,b) for commuting a,b: T_a T_b = (-1)^beta T_{a+b}. Throws on
/// anticommuting inputs.
int beta(const PauliPoint &a, const PauliPoint &b);

/// i^phase T_point. Hermitian elements have phase in {0, 2}.
struct PhasedPauli {
  int phase = 0;  // exponent of i, mod 4
  PauliPoint pt;

  PhasedPauli() = default;
  PhasedPauli(int phase_, PauliPoint pt_) : phase(((phase_ % 4) + 4) % 4), pt(pt_) {}

  static PhasedPauli identity(uint32_t n) { return PhasedPauli(0, PauliPoint::zero(n)); }

  bool hermitian() const { return phase == 0 || phase == 2; }
  /// Sign bit of a Hermitian element: 0 for +T_a, 1 for -T_a.
  int sign_bit() const { return phase >> 1; }

  friend bool operator==(const PhasedPauli &a, const PhasedPauli &b) {
    return a.phase == b.phase && a.pt == b.pt;
  }
};

/// Product under the i^{-<a_z|a_x>} Z X phase convention.
PhasedPauli mul(const PhasedPauli &p, const PhasedPauli &q);

/// Text form: sign prefix (+/-, optional i) then one of I,X,Y,Z per qubit,
/// qubit 0 first; e.g. "+XZI", "-iYZ". Parsing accepts a missing "+".
std::string to_string(const PhasedPauli &p);
PhasedPauli parse_pauli(const std::string &s);

/// Single-qubit points embedded on qubit q of an n-qubit register.
PauliPoint pt_x(uint32_t n, uint32_t q);
PauliPoint pt_y(uint32_t n, uint32_t q);
PauliPoint pt_z(uint32_t n, uint32_t q);

/// All 4^n points of E, identity first, in (z,x) integer order.
std::vector<PauliPoint> all_points(uint32_t n);

/// An isotropic subspace I of E with a consistent sign assignment r, i.e.
/// the data of a stabilizer projector Pi_I^r = (1/|I|) sum (-1)^{r(a)} T_a.
/// The basis is kept row-reduced over GF(2); signs follow the group law
/// (-1)^{r(a)} T_a * (-1)^{r(b)} T_b = (-1)^{r(a+b)} T_{a+b}.
class IsotropicSubspace {
 public:
  explicit IsotropicSubspace(uint32_t n) : n_(n) {}
  /// Builds from an arbitrary basis with signs; throws if the points are
  /// dependent, non-commuting, or the signs are inconsistent.
  IsotropicSubspace(uint32_t n, const std::vector<PauliPoint> &basis,
                    const std::vector<int> &signs);

  uint32_t num_qubits() const { return n_; }
  size_t dim() const { return rows_.size(); }

  bool commutes_with(const PauliPoint &p) const;
  bool in_span(const PauliPoint &p) const;

  /// Reduces p modulo the span: returns (rep, sign) with
  /// Pi_I^r T_p = (-1)^{sign} Pi_I^r T_rep and rep the canonical coset
  /// representative (RREF-reduced). Requires p to commute with I.
  std::pair<PauliPoint, int> reduce(const PauliPoint &p) const;

  /// r(p) for p in the span.
  int sign_of(const PauliPoint &p) const;

  /// Adjoins a commuting point with sign; no-op consistency check if p is
  /// already in the span (throws on contradiction).
  void add(const PauliPoint &p, int sign);

  /// All 2^dim elements with their signs.
  std::vector<std::pair<PauliPoint, int>> span_elements() const;

  const std::vector<std::pair<PauliPoint, int>> &rows() const { return rows_; }

  /// Dedup key for the subspace + signs.
  std::string key() const;

 private:
  uint32_t n_;
  std::vector<std::pair<PauliPoint, int>> rows_;  // RREF by leading bit of key()
};

/// All maximal isotropic subspaces of E (no signs). Count is
/// prod_{k=1..n} (2^k + 1). Throws if n exceeds the cap.
std::vector<std::vector<PauliPoint>> enumerate_maximal_isotropics(uint32_t n, uint32_t cap = 3);

/// All stabilizer projectors: maximal subspaces x all 2^n sign choices.
/// Count is 2^n * prod_{k=1..n} (2^k + 1).
std::vector<IsotropicSubspace> enumerate_stabilizer_projectors(uint32_t n, uint32_t cap = 3);

}  // namespace qpsim
