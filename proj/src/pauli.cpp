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

#include "qpsim/pauli.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qpsim {

namespace {
inline int pc(uint64_t v) { return std::popcount(v); }

void check_same_n(const PauliPoint &a, const PauliPoint &b) {
  if (a.n != b.n) throw std::invalid_argument("mismatched qubit counts");
}
}  // namespace

int symplectic(const PauliPoint &a, const PauliPoint &b) {
  check_same_n(a, b);
  return (pc(a.z & b.x) + pc(a.x & b.z)) & 1;
}

int phase_of_product(const PauliPoint &a, const PauliPoint &b) {
  check_same_n(a, b);
  PauliPoint c = a ^ b;
  int k = pc(c.z & c.x) - pc(a.z & a.x) - pc(b.z & b.x) + 2 * pc(a.x & b.z);
  return ((k % 4) + 4) % 4;
}

int beta(const PauliPoint &a, const PauliPoint &b) {
  if (symplectic(a, b) != 0) throw std::invalid_argument("beta on anticommuting pair");
  return (phase_of_product(a, b) >> 1) & 1;
}

PhasedPauli mul(const PhasedPauli &p, const PhasedPauli &q) {
  return PhasedPauli(p.phase + q.phase + phase_of_product(p.pt, q.pt), p.pt ^ q.pt);
}

std::string to_string(const PhasedPauli &p) {
  static const char *prefix[4] = {"+", "+i", "-", "-i"};
  std::string s = prefix[p.phase & 3];
  for (uint32_t k = 0; k < p.pt.n; ++k) {
    int zb = (p.pt.z >> k) & 1, xb = (p.pt.x >> k) & 1;
    s += zb ? (xb ? 'Y' : 'Z') : (xb ? 'X' : 'I');
  }
  return s;
}

PhasedPauli parse_pauli(const std::string &s) {
  size_t i = 0;
  int phase = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') phase = 2;
    ++i;
  }
  if (i < s.size() && s[i] == 'i') {
    phase += 1;
    ++i;
  }
  uint64_t z = 0, x = 0;
  uint32_t n = 0;
  for (; i < s.size(); ++i, ++n) {
    if (n >= 64) throw std::invalid_argument("pauli string too long");
    switch (s[i]) {
      case 'I': break;
      case 'X': x |= 1ull << n; break;
      case 'Z': z |= 1ull << n; break;
      case 'Y': z |= 1ull << n; x |= 1ull << n; break;
      default: throw std::invalid_argument("bad pauli character in: " + s);
    }
  }
  if (n == 0) throw std::invalid_argument("empty pauli string");
  return PhasedPauli(phase, PauliPoint(n, z, x));
}

PauliPoint pt_x(uint32_t n, uint32_t q) { return PauliPoint(n, 0, 1ull << q); }
PauliPoint pt_y(uint32_t n, uint32_t q) { return PauliPoint(n, 1ull << q, 1ull << q); }
PauliPoint pt_z(uint32_t n, uint32_t q) { return PauliPoint(n, 1ull << q, 0); }

std::vector<PauliPoint> all_points(uint32_t n) {
  std::vector<PauliPoint> out;
  out.reserve(1ull << (2 * n));
  for (uint64_t zz = 0; zz < (1ull << n); ++zz)
    for (uint64_t xx = 0; xx < (1ull << n); ++xx) out.emplace_back(n, zz, xx);
  std::sort(out.begin(), out.end());
  return out;
}

IsotropicSubspace::IsotropicSubspace(uint32_t n, const std::vector<PauliPoint> &basis,
                                     const std::vector<int> &signs)
    : n_(n) {
  if (basis.size() != signs.size()) throw std::invalid_argument("basis/sign size mismatch");
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) throw std::invalid_argument("zero point in basis");
    if (in_span(basis[i])) {
      // dependent input: only allowed if sign matches the implied one
      if (sign_of(basis[i]) != (signs[i] & 1))
        throw std::invalid_argument("inconsistent sign assignment");
      continue;
    }
    add(basis[i], signs[i]);
  }
}

bool IsotropicSubspace::commutes_with(const PauliPoint &p) const {
  for (const auto &[b, s] : rows_)
    if (symplectic(p, b) != 0) return false;
  return true;
}

bool IsotropicSubspace::in_span(const PauliPoint &p) const {
  uint64_t v = p.key();
  for (const auto &[b, s] : rows_) {
    uint64_t bk = b.key();
    uint64_t piv = 63 - std::countl_zero(bk);
    if ((v >> piv) & 1) v ^= bk;
  }
  return v == 0;
}

std::pair<PauliPoint, int> IsotropicSubspace::reduce(const PauliPoint &p) const {
  PauliPoint rep = p;
  int sign = 0;
  for (const auto &[b, rb] : rows_) {
    uint64_t piv = 63 - std::countl_zero(b.key());
    if ((rep.key() >> piv) & 1) {
      PauliPoint rep2 = rep ^ b;
      // Pi T_rep = (-1)^{beta(rep2,b) + r(b)} Pi T_rep2
      sign = (sign + beta(rep2, b) + rb) & 1;
      rep = rep2;
    }
  }
  return {rep, sign};
}

int IsotropicSubspace::sign_of(const PauliPoint &p) const {
  auto [rep, sign] = reduce(p);
  if (!rep.is_zero()) throw std::invalid_argument("sign_of: point not in span");
  return sign;
}

void IsotropicSubspace::add(const PauliPoint &p, int sign) {
  if (!commutes_with(p)) throw std::invalid_argument("adding anticommuting point to isotropic subspace");
  sign &= 1;
  if (in_span(p)) {
    if (sign_of(p) != sign) throw std::invalid_argument("inconsistent sign on dependent point");
    return;
  }
  // reduce new row against existing rows
  PauliPoint b = p;
  int sb = sign;
  for (const auto &[ob, osb] : rows_) {
    uint64_t piv = 63 - std::countl_zero(ob.key());
    if ((b.key() >> piv) & 1) {
      PauliPoint nb = b ^ ob;
      sb = (sb + osb + beta(nb, ob)) & 1;
      b = nb;
    }
  }
  rows_.emplace_back(b, sb);
  // restore RREF: eliminate this row's pivot from the others, keep rows sorted
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(rows_.begin(), rows_.end(),
              [](const auto &l, const auto &r) { return l.first.key() > r.first.key(); });
    for (size_t i = 0; i < rows_.size() && !changed; ++i) {
      for (size_t j = 0; j < rows_.size() && !changed; ++j) {
        if (i == j) continue;
        uint64_t pivj = 63 - std::countl_zero(rows_[j].first.key());
        if ((rows_[i].first.key() >> pivj) & 1) {
          PauliPoint nb = rows_[i].first ^ rows_[j].first;
          int ns = (rows_[i].second + rows_[j].second + beta(nb, rows_[j].first)) & 1;
          rows_[i] = {nb, ns};
          changed = true;
        }
      }
    }
  }
}

std::vector<std::pair<PauliPoint, int>> IsotropicSubspace::span_elements() const {
  std::vector<std::pair<PauliPoint, int>> out{{PauliPoint::zero(n_), 0}};
  for (const auto &[b, rb] : rows_) {
    size_t sz = out.size();
    for (size_t i = 0; i < sz; ++i) {
      auto [e, s] = out[i];
      out.emplace_back(e ^ b, (s + rb + beta(e, b)) & 1);
    }
  }
  return out;
}

std::string IsotropicSubspace::key() const {
  auto elems = span_elements();
  std::sort(elems.begin(), elems.end(),
            [](const auto &l, const auto &r) { return l.first < r.first; });
  std::string k;
  for (const auto &[p, s] : elems) {
    k += std::to_string(p.key());
    k += s ? '-' : '+';
    k += ';';
  }
  return k;
}

namespace {
void isotropic_dfs(uint32_t n, std::vector<PauliPoint> &basis, std::vector<PauliPoint> &span,
                   std::set<std::vector<uint64_t>> &seen,
                   std::vector<std::vector<PauliPoint>> &out) {
  if (basis.size() == n) {
    std::vector<uint64_t> keys;
    keys.reserve(span.size());
    for (const auto &p : span) keys.push_back(p.key());
    std::sort(keys.begin(), keys.end());
    if (seen.insert(keys).second) out.push_back(basis);
    return;
  }
  for (uint64_t zz = 0; zz < (1ull << n); ++zz) {
    for (uint64_t xx = 0; xx < (1ull << n); ++xx) {
      PauliPoint p(n, zz, xx);
      if (p.is_zero()) continue;
      bool ok = true;
      bool member = false;
      for (const auto &q : span) {
        if (q == p) member = true;
        if (symplectic(p, q) != 0) {
          ok = false;
          break;
        }
      }
      if (!ok || member) continue;
      size_t sz = span.size();
      for (size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ p);
      basis.push_back(p);
      isotropic_dfs(n, basis, span, seen, out);
      basis.pop_back();
      span.resize(sz);
    }
  }
}
}  // namespace

std::vector<std::vector<PauliPoint>> enumerate_maximal_isotropics(uint32_t n, uint32_t cap) {
  if (n > cap) throw std::invalid_argument("qubit count exceeds stabilizer enumeration cap");
  std::vector<PauliPoint> basis, span{PauliPoint::zero(n)};
  std::set<std::vector<uint64_t>> seen;
  std::vector<std::vector<PauliPoint>> out;
  isotropic_dfs(n, basis, span, seen, out);
  return out;
}

std::vector<IsotropicSubspace> enumerate_stabilizer_projectors(uint32_t n, uint32_t cap) {
  auto bases = enumerate_maximal_isotropics(n, cap);
  std::vector<IsotropicSubspace> out;
  out.reserve(bases.size() << n);
  for (const auto &basis : bases) {
    for (uint64_t bits = 0; bits < (1ull << basis.size()); ++bits) {
      std::vector<int> signs(basis.size());
      for (size_t i = 0; i < basis.size(); ++i) signs[i] = (bits >> i) & 1;
      out.emplace_back(n, basis, signs);
    }
  }
  return out;
}

}  // namespace qpsim
