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

#include "qpsim/pauli.hpp"

namespace qpsim {

/// Clifford group element stored as the signed images of the 2n Pauli
/// generators: g(T_{Z_k}) and g(T_{X_k}). The sign function Phi_g on an
/// arbitrary point is recovered by composing generator images with `mul`.
class CliffordTableau {
 public:
  explicit CliffordTableau(uint32_t n);

  uint32_t num_qubits() const { return n_; }

  /// g(i^k T_a) = i^k (-1)^{Phi_g(a)} T_{S_g a}.
  PhasedPauli apply(const PhasedPauli &p) const;
  PauliPoint apply_point(const PauliPoint &p) const;

  /// Composition: (a.then(b)).apply(p) == b.apply(a.apply(p)).
  CliffordTableau then(const CliffordTableau &later) const;

  /// The induced map S_g is symplectic; verified in tests.
  const PhasedPauli &z_image(uint32_t q) const { return z_images_[q]; }
  const PhasedPauli &x_image(uint32_t q) const { return x_images_[q]; }
  void set_z_image(uint32_t q, const PhasedPauli &p) { z_images_[q] = p; }
  void set_x_image(uint32_t q, const PhasedPauli &p) { x_images_[q] = p; }

  static CliffordTableau identity(uint32_t n);
  static CliffordTableau h(uint32_t n, uint32_t q);
  static CliffordTableau s(uint32_t n, uint32_t q);
  static CliffordTableau sdg(uint32_t n, uint32_t q);
  static CliffordTableau sx(uint32_t n, uint32_t q);
  static CliffordTableau sxdg(uint32_t n, uint32_t q);
  static CliffordTableau x(uint32_t n, uint32_t q);
  static CliffordTableau y(uint32_t n, uint32_t q);
  static CliffordTableau z(uint32_t n, uint32_t q);
  static CliffordTableau cx(uint32_t n, uint32_t c, uint32_t t);
  static CliffordTableau cz(uint32_t n, uint32_t a, uint32_t b);
  static CliffordTableau swap(uint32_t n, uint32_t a, uint32_t b);

  /// Named gate dispatch; qubits as required by the gate (1 or 2).
  static CliffordTableau from_gate(const std::string &name, uint32_t n,
                                   const std::vector<uint32_t> &qubits);
  static bool is_gate_name(const std::string &name);

 private:
  uint32_t n_;
  std::vector<PhasedPauli> z_images_;
  std::vector<PhasedPauli> x_images_;
};

}  // namespace qpsim
