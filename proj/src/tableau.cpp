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

#include "qpsim/tableau.hpp"

#include <bit>
#include <stdexcept>

namespace qpsim {

CliffordTableau::CliffordTableau(uint32_t n) : n_(n) {
  z_images_.reserve(n);
  x_images_.reserve(n);
  for (uint32_t q = 0; q < n; ++q) {
    z_images_.emplace_back(0, pt_z(n, q));
    x_images_.emplace_back(0, pt_x(n, q));
  }
}

CliffordTableau CliffordTableau::identity(uint32_t n) { return CliffordTableau(n); }

PhasedPauli CliffordTableau::apply(const PhasedPauli &p) const {
  if (p.pt.n != n_) throw std::invalid_argument("tableau/pauli qubit count mismatch");
  // T_a = i^{-<a_z|a_x>} prod_k Z_k^{a_z[k]} prod_k X_k^{a_x[k]}
  int dot = std::popcount(p.pt.z & p.pt.x);
  PhasedPauli acc(p.phase - dot, PauliPoint::zero(n_));
  for (uint32_t q = 0; q < n_; ++q)
    if ((p.pt.z >> q) & 1) acc = mul(acc, z_images_[q]);
  for (uint32_t q = 0; q < n_; ++q)
    if ((p.pt.x >> q) & 1) acc = mul(acc, x_images_[q]);
  return acc;
}

PauliPoint CliffordTableau::apply_point(const PauliPoint &p) const {
  PauliPoint out = PauliPoint::zero(n_);
  for (uint32_t q = 0; q < n_; ++q) {
    if ((p.z >> q) & 1) out = out ^ z_images_[q].pt;
    if ((p.x >> q) & 1) out = out ^ x_images_[q].pt;
  }
  return out;
}

CliffordTableau CliffordTableau::then(const CliffordTableau &later) const {
  if (later.n_ != n_) throw std::invalid_argument("tableau qubit count mismatch");
  CliffordTableau out(n_);
  for (uint32_t q = 0; q < n_; ++q) {
    out.z_images_[q] = later.apply(z_images_[q]);
    out.x_images_[q] = later.apply(x_images_[q]);
  }
  return out;
}

CliffordTableau CliffordTableau::h(uint32_t n, uint32_t q) {
  CliffordTableau t(n);
  t.z_images_[q] = PhasedPauli(0, pt_x(n, q));
  t.x_images_[q] = PhasedPauli(0, pt_z(n, q));
  return t;
}

CliffordTableau CliffordTableau::s(uint32_t n, uint32_t q) {
  CliffordTableau t(n);
  t.x_images_[q] = PhasedPauli(0, pt_y(n, q));  // S X S^dag = Y
  return t;
}

CliffordTableau CliffordTableau::sdg(uint32_t n, uint32_t q) {
  CliffordTableau t(n);
  t.x_images_[q] = PhasedPauli(2, pt_y(n, q));  // Sdg X S = -Y
  return t;
}

CliffordTableau CliffordTableau::sx(uint32_t n, uint32_t q) {
  CliffordTableau t(n);
  t.z_images_[q] = PhasedPauli(2, pt_y(n, q));  // SX Z SXdg = -Y
  return t;
}

CliffordTableau CliffordTableau::sxdg(uint32_t n, uint32_t q) {
  CliffordTableau t(n);
  t.z_images_[q] = PhasedPauli(0, pt_y(n, q));
  return t;
}

CliffordTableau CliffordTableau::x(uint32_t n, uint32_t q) {
  CliffordTableau t(n);
  t.z_images_[q] = PhasedPauli(2, pt_z(n, q));
  return t;
}

CliffordTableau CliffordTableau::y(uint32_t n, uint32_t q) {
  CliffordTableau t(n);
  t.z_images_[q] = PhasedPauli(2, pt_z(n, q));
  t.x_images_[q] = PhasedPauli(2, pt_x(n, q));
  return t;
}

CliffordTableau CliffordTableau::z(uint32_t n, uint32_t q) {
  CliffordTableau t(n);
  t.x_images_[q] = PhasedPauli(2, pt_x(n, q));
  return t;
}

CliffordTableau CliffordTableau::cx(uint32_t n, uint32_t c, uint32_t t) {
  if (c == t) throw std::invalid_argument("cx control equals target");
  CliffordTableau g(n);
  g.x_images_[c] = PhasedPauli(0, pt_x(n, c) ^ pt_x(n, t));
  g.z_images_[t] = PhasedPauli(0, pt_z(n, c) ^ pt_z(n, t));
  return g;
}

CliffordTableau CliffordTableau::cz(uint32_t n, uint32_t a, uint32_t b) {
  if (a == b) throw std::invalid_argument("cz qubits equal");
  CliffordTableau g(n);
  g.x_images_[a] = PhasedPauli(0, pt_x(n, a) ^ pt_z(n, b));
  g.x_images_[b] = PhasedPauli(0, pt_x(n, b) ^ pt_z(n, a));
  return g;
}

CliffordTableau CliffordTableau::swap(uint32_t n, uint32_t a, uint32_t b) {
  if (a == b) throw std::invalid_argument("swap qubits equal");
  CliffordTableau g(n);
  g.x_images_[a] = PhasedPauli(0, pt_x(n, b));
  g.x_images_[b] = PhasedPauli(0, pt_x(n, a));
  g.z_images_[a] = PhasedPauli(0, pt_z(n, b));
  g.z_images_[b] = PhasedPauli(0, pt_z(n, a));
  return g;
}

bool CliffordTableau::is_gate_name(const std::string &name) {
  for (const char *g : {"H", "S", "SDG", "SX", "SXDG", "X", "Y", "Z", "CX", "CZ", "SWAP"})
    if (name == g) return true;
  return false;
}

CliffordTableau CliffordTableau::from_gate(const std::string &name, uint32_t n,
                                           const std::vector<uint32_t> &qs) {
  auto need = [&](size_t k) {
    if (qs.size() != k) throw std::invalid_argument("gate " + name + " expects " + std::to_string(k) + " qubit(s)");
    for (uint32_t q : qs)
      if (q >= n) throw std::invalid_argument("gate qubit out of range");
  };
  if (name == "H") { need(1); return h(n, qs[0]); }
  if (name == "S") { need(1); return s(n, qs[0]); }
  if (name == "SDG") { need(1); return sdg(n, qs[0]); }
  if (name == "SX") { need(1); return sx(n, qs[0]); }
  if (name == "SXDG") { need(1); return sxdg(n, qs[0]); }
  if (name == "X") { need(1); return x(n, qs[0]); }
  if (name == "Y") { need(1); return y(n, qs[0]); }
  if (name == "Z") { need(1); return z(n, qs[0]); }
  if (name == "CX") { need(2); return cx(n, qs[0], qs[1]); }
  if (name == "CZ") { need(2); return cz(n, qs[0], qs[1]); }
  if (name == "SWAP") { need(2); return swap(n, qs[0], qs[1]); }
  throw std::invalid_argument("unknown gate: " + name);
}

}  // namespace qpsim
