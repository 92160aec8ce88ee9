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

#include "qpsim/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qpsim {

Cyclo8 Cyclo8::i() {
  Cyclo8 z;
  z.c[2] = 1;
  return z;
}

Cyclo8 Cyclo8::zeta() {
  Cyclo8 z;
  z.c[1] = 1;
  return z;
}

Cyclo8 Cyclo8::inv_sqrt2() {
  Cyclo8 z;
  z.c[1] = Rational(1, 2);
  z.c[3] = Rational(-1, 2);
  return z;
}

Cyclo8 Cyclo8::conj() const {
  // conj(zeta^k) = zeta^{-k} = -zeta^{4-k} for k=1..3
  Cyclo8 out;
  out.c[0] = c[0];
  out.c[1] = -c[3];
  out.c[2] = -c[2];
  out.c[3] = -c[1];
  return out;
}

std::complex<double> Cyclo8::to_complex() const {
  const double s = std::sqrt(0.5);
  std::complex<double> zeta(s, s);
  std::complex<double> acc(to_double(c[0]), 0.0);
  acc += to_double(c[1]) * zeta;
  acc += to_double(c[2]) * std::complex<double>(0, 1);
  acc += to_double(c[3]) * std::complex<double>(-s, s);
  return acc;
}

Cyclo8 operator+(const Cyclo8 &a, const Cyclo8 &b) {
  Cyclo8 out;
  for (int k = 0; k < 4; ++k) out.c[k] = a.c[k] + b.c[k];
  return out;
}

Cyclo8 operator-(const Cyclo8 &a, const Cyclo8 &b) {
  Cyclo8 out;
  for (int k = 0; k < 4; ++k) out.c[k] = a.c[k] - b.c[k];
  return out;
}

Cyclo8 operator*(const Cyclo8 &a, const Cyclo8 &b) {
  Rational acc[7];
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c[j] == 0) continue;
      acc[i + j] += a.c[i] * b.c[j];
    }
  }
  Cyclo8 out;
  for (int k = 0; k < 4; ++k) out.c[k] = acc[k];
  for (int k = 4; k < 7; ++k) out.c[k - 4] -= acc[k];  // zeta^4 = -1
  return out;
}

Cyclo8 operator*(const Rational &a, const Cyclo8 &b) {
  Cyclo8 out;
  for (int k = 0; k < 4; ++k) out.c[k] = a * b.c[k];
  return out;
}

bool operator==(const Cyclo8 &a, const Cyclo8 &b) {
  for (int k = 0; k < 4; ++k)
    if (a.c[k] != b.c[k]) return false;
  return true;
}

double QSqrt2::to_double() const { return qpsim::to_double(u) + qpsim::to_double(v) * std::sqrt(2.0); }

DenseOperator::DenseOperator(uint32_t n, bool exact) : n_(n), exact_(exact) {
  if (n > 10) throw std::invalid_argument("dense operator size cap exceeded");
  size_t d = dim();
  if (exact_) m_.assign(d * d, Cyclo8());
  fm_.assign(d * d, {0.0, 0.0});
}

Cyclo8 &DenseOperator::at(size_t r, size_t c) {
  if (!exact_) throw std::logic_error("exact entry access on float-only operator");
  return m_[r * dim() + c];
}

const Cyclo8 &DenseOperator::at(size_t r, size_t c) const {
  if (!exact_) throw std::logic_error("exact entry access on float-only operator");
  return m_[r * dim() + c];
}

void DenseOperator::refresh_float() {
  if (!exact_) return;
  for (size_t i = 0; i < m_.size(); ++i) fm_[i] = m_[i].to_complex();
}

DenseOperator DenseOperator::identity(uint32_t n) {
  DenseOperator out(n, true);
  for (size_t i = 0; i < out.dim(); ++i) out.at(i, i) = Cyclo8::one();
  out.refresh_float();
  return out;
}

DenseOperator operator+(const DenseOperator &a, const DenseOperator &b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dense size mismatch");
  DenseOperator out(a.n_, a.exact_ && b.exact_);
  if (out.exact_)
    for (size_t i = 0; i < out.m_.size(); ++i) out.m_[i] = a.m_[i] + b.m_[i];
  for (size_t i = 0; i < out.fm_.size(); ++i) out.fm_[i] = a.fm_[i] + b.fm_[i];
  return out;
}

DenseOperator operator-(const DenseOperator &a, const DenseOperator &b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dense size mismatch");
  DenseOperator out(a.n_, a.exact_ && b.exact_);
  if (out.exact_)
    for (size_t i = 0; i < out.m_.size(); ++i) out.m_[i] = a.m_[i] - b.m_[i];
  for (size_t i = 0; i < out.fm_.size(); ++i) out.fm_[i] = a.fm_[i] - b.fm_[i];
  return out;
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dense size mismatch");
  size_t d = a.dim();
  DenseOperator out(a.n_, a.exact_ && b.exact_);
  if (out.exact_) {
    for (size_t i = 0; i < d; ++i)
      for (size_t k = 0; k < d; ++k) {
        const Cyclo8 &aik = a.m_[i * d + k];
        if (aik.is_zero()) continue;
        for (size_t j = 0; j < d; ++j) {
          const Cyclo8 &bkj = b.m_[k * d + j];
          if (bkj.is_zero()) continue;
          out.m_[i * d + j] = out.m_[i * d + j] + aik * bkj;
        }
      }
    out.refresh_float();
  } else {
    for (size_t i = 0; i < d; ++i)
      for (size_t k = 0; k < d; ++k) {
        auto aik = a.fm_[i * d + k];
        if (aik == std::complex<double>(0, 0)) continue;
        for (size_t j = 0; j < d; ++j) out.fm_[i * d + j] += aik * b.fm_[k * d + j];
      }
  }
  return out;
}

DenseOperator DenseOperator::scaled(const Rational &r) const {
  DenseOperator out(n_, exact_);
  if (exact_)
    for (size_t i = 0; i < m_.size(); ++i) out.m_[i] = r * m_[i];
  double rf = qpsim::to_double(r);
  for (size_t i = 0; i < fm_.size(); ++i) out.fm_[i] = rf * fm_[i];
  return out;
}

DenseOperator DenseOperator::scaled_cyclo(const Cyclo8 &z) const {
  DenseOperator out(n_, exact_);
  if (exact_) {
    for (size_t i = 0; i < m_.size(); ++i) out.m_[i] = z * m_[i];
    out.refresh_float();
  } else {
    auto zf = z.to_complex();
    for (size_t i = 0; i < fm_.size(); ++i) out.fm_[i] = zf * fm_[i];
  }
  return out;
}

DenseOperator DenseOperator::adjoint() const {
  size_t d = dim();
  DenseOperator out(n_, exact_);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (exact_) out.m_[j * d + i] = m_[i * d + j].conj();
      out.fm_[j * d + i] = std::conj(fm_[i * d + j]);
    }
  return out;
}

DenseOperator DenseOperator::kron(const DenseOperator &other) const {
  // `this` occupies the low qubits of the result (qubit 0 = LSB of the
  // basis index), `other` the high ones.
  uint32_t n2 = n_ + other.n_;
  DenseOperator out(n2, exact_ && other.exact_);
  size_t da = dim(), db = other.dim();
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j)
      for (size_t k = 0; k < db; ++k)
        for (size_t l = 0; l < db; ++l) {
          size_t r = i + k * da, c = j + l * da;
          if (out.exact_) out.m_[r * out.dim() + c] = m_[i * da + j] * other.m_[k * db + l];
          out.fm_[r * out.dim() + c] = fm_[i * da + j] * other.fm_[k * db + l];
        }
  return out;
}

Cyclo8 DenseOperator::trace() const {
  if (!exact_) throw std::logic_error("exact trace of float-only operator");
  Cyclo8 t;
  for (size_t i = 0; i < dim(); ++i) t = t + m_[i * dim() + i];
  return t;
}

QSqrt2 DenseOperator::real_trace() const {
  Cyclo8 t = trace();
  // real element: c2 = 0, c1 = -c3; value = c0 + c1*sqrt2... zeta - zeta^3 = sqrt2
  if (!(t.c[2] == 0 && t.c[1] == -t.c[3]))
    throw std::logic_error("trace is not real");
  return QSqrt2{t.c[0], t.c[1]};
}

std::complex<double> DenseOperator::trace_float() const {
  std::complex<double> t = 0;
  for (size_t i = 0; i < dim(); ++i) t += fm_[i * dim() + i];
  return t;
}

bool DenseOperator::equals_exact(const DenseOperator &other) const {
  if (!exact_ || !other.exact_ || n_ != other.n_) return false;
  for (size_t i = 0; i < m_.size(); ++i)
    if (!(m_[i] == other.m_[i])) return false;
  return true;
}

double DenseOperator::max_abs_diff(const DenseOperator &other) const {
  double mx = 0;
  for (size_t i = 0; i < fm_.size(); ++i) mx = std::max(mx, std::abs(fm_[i] - other.fm_[i]));
  return mx;
}

std::string DenseOperator::dump() const {
  std::ostringstream os;
  os << "n=" << n_ << "\n";
  size_t d = dim();
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      if (j) os << " ";
      os << fm_[i * d + j].real() << " " << fm_[i * d + j].imag();
    }
    os << "\n";
  }
  return os.str();
}

bool DenseOperator::is_hermitian(double tol) const {
  size_t d = dim();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      if (std::abs(fm_[i * d + j] - std::conj(fm_[j * d + i])) > tol) return false;
  return true;
}

namespace {
DenseOperator single_qubit(const Cyclo8 &a, const Cyclo8 &b, const Cyclo8 &c, const Cyclo8 &d) {
  DenseOperator m(1, true);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  m.refresh_float();
  return m;
}

DenseOperator mat_i() { return DenseOperator::identity(1); }
DenseOperator mat_x() {
  return single_qubit(Cyclo8::zero(), Cyclo8::one(), Cyclo8::one(), Cyclo8::zero());
}
DenseOperator mat_z() {
  return single_qubit(Cyclo8::one(), Cyclo8::zero(), Cyclo8::zero(), Cyclo8(Rational(-1)));
}
}  // namespace

DenseOperator dense_pauli(const PhasedPauli &p) {
  uint32_t n = p.pt.n;
  DenseOperator out = DenseOperator::identity(0);
  for (uint32_t q = 0; q < n; ++q) {
    int zb = (p.pt.z >> q) & 1, xb = (p.pt.x >> q) & 1;
    DenseOperator f = mat_i();
    if (zb && xb)
      f = mat_z() * mat_x();
    else if (zb)
      f = mat_z();
    else if (xb)
      f = mat_x();
    out = out.kron(f);
  }
  // global phase i^{p.phase - <a_z|a_x>}
  int k = ((p.phase - std::popcount(p.pt.z & p.pt.x)) % 4 + 4) % 4;
  Cyclo8 ph = Cyclo8::one();
  for (int t = 0; t < k; ++t) ph = ph * Cyclo8::i();
  return out.scaled_cyclo(ph);
}

DenseOperator make_projector(const IsotropicSubspace &I) {
  uint32_t n = I.num_qubits();
  auto elems = I.span_elements();
  DenseOperator acc = DenseOperator::zeros(n);
  for (const auto &[p, s] : elems) {
    DenseOperator t = dense_pauli(PhasedPauli(s ? 2 : 0, p));
    acc = acc + t;
  }
  acc = acc.scaled(Rational(1, BigInt(elems.size())));
  acc.refresh_float();
  return acc;
}

namespace {
DenseOperator named_state(const std::string &name) {
  Rational half(1, 2);
  if (name == "0") return single_qubit(Cyclo8::one(), Cyclo8::zero(), Cyclo8::zero(), Cyclo8::zero());
  if (name == "1") return single_qubit(Cyclo8::zero(), Cyclo8::zero(), Cyclo8::zero(), Cyclo8::one());
  if (name == "+")
    return single_qubit(Cyclo8(half), Cyclo8(half), Cyclo8(half), Cyclo8(half));
  if (name == "-")
    return single_qubit(Cyclo8(half), Cyclo8(Rational(-1, 2)), Cyclo8(Rational(-1, 2)), Cyclo8(half));
  if (name == "H") {
    // |H><H| = 1/2 [[1, zeta^-1],[zeta, 1]]
    Cyclo8 ze = Cyclo8::zeta();
    Cyclo8 zi = ze.conj();
    return single_qubit(Cyclo8(half), half * zi, half * ze, Cyclo8(half));
  }
  if (name == "T") {
    // Bloch (1,1,1)/sqrt(3): not representable in Q[zeta]; float only.
    DenseOperator m(1, false);
    double s = 1.0 / std::sqrt(3.0);
    m.fat(0, 0) = 0.5 * (1 + s);
    m.fat(1, 1) = 0.5 * (1 - s);
    m.fat(0, 1) = 0.5 * std::complex<double>(s, -s);
    m.fat(1, 0) = 0.5 * std::complex<double>(s, s);
    return m;
  }
  throw std::invalid_argument("unknown state name: " + name);
}
}  // namespace

DenseOperator dense_state(const std::vector<std::string> &names) {
  if (names.empty()) throw std::invalid_argument("empty state spec");
  DenseOperator out = DenseOperator::identity(0);
  for (const auto &nm : names) out = out.kron(named_state(nm));
  if (!out.is_hermitian()) throw std::logic_error("state not hermitian");
  return out;
}

DenseOperator dense_gate(const std::string &name, uint32_t n, const std::vector<uint32_t> &qubits) {
  // build from 2^n x 2^n by acting on basis states
  auto t = CliffordTableau::from_gate(name, n, qubits);
  (void)t;  // validates name/arity
  size_t d = size_t(1) << n;
  DenseOperator out(n, true);
  Cyclo8 is2 = Cyclo8::inv_sqrt2();
  Cyclo8 one = Cyclo8::one();
  Cyclo8 im = Cyclo8::i();
  if (name == "H") {
    uint32_t q = qubits[0];
    for (size_t b = 0; b < d; ++b) {
      size_t pos = (b >> q) & 1;
      // |b> -> (|b with q=0> + (-1)^pos |b with q=1>)/sqrt2
      size_t b0 = b & ~(size_t(1) << q), b1 = b | (size_t(1) << q);
      out.at(b0, b) = out.at(b0, b) + is2;
      out.at(b1, b) = out.at(b1, b) + (pos ? Rational(-1) * is2 : is2);
    }
  } else if (name == "S" || name == "SDG") {
    uint32_t q = qubits[0];
    for (size_t b = 0; b < d; ++b)
      out.at(b, b) = ((b >> q) & 1) ? (name == "S" ? im : Rational(-1) * im) : one;
  } else if (name == "X") {
    uint32_t q = qubits[0];
    for (size_t b = 0; b < d; ++b) out.at(b ^ (size_t(1) << q), b) = one;
  } else if (name == "Y") {
    uint32_t q = qubits[0];
    for (size_t b = 0; b < d; ++b) {
      size_t b2 = b ^ (size_t(1) << q);
      out.at(b2, b) = ((b >> q) & 1) ? Rational(-1) * im : im;
    }
  } else if (name == "Z") {
    uint32_t q = qubits[0];
    for (size_t b = 0; b < d; ++b) out.at(b, b) = ((b >> q) & 1) ? Cyclo8(Rational(-1)) : one;
  } else if (name == "SX" || name == "SXDG") {
    uint32_t q = qubits[0];
    // SX = (1/2)[[1+i, 1-i],[1-i, 1+i]] on qubit q
    Cyclo8 half(Rational(1, 2));
    Cyclo8 a = half * (one + im), bcoef = half * (one - im);
    if (name == "SXDG") std::swap(a, bcoef);
    for (size_t b = 0; b < d; ++b) {
      size_t b2 = b ^ (size_t(1) << q);
      out.at(b, b) = a;
      out.at(b2, b) = out.at(b2, b) + bcoef;
    }
  } else if (name == "CX") {
    uint32_t c = qubits[0], tq = qubits[1];
    for (size_t b = 0; b < d; ++b) {
      size_t to = ((b >> c) & 1) ? (b ^ (size_t(1) << tq)) : b;
      out.at(to, b) = one;
    }
  } else if (name == "CZ") {
    uint32_t a = qubits[0], bq = qubits[1];
    for (size_t b = 0; b < d; ++b)
      out.at(b, b) = (((b >> a) & 1) && ((b >> bq) & 1)) ? Cyclo8(Rational(-1)) : one;
  } else if (name == "SWAP") {
    uint32_t a = qubits[0], bq = qubits[1];
    for (size_t b = 0; b < d; ++b) {
      size_t ba = (b >> a) & 1, bb = (b >> bq) & 1;
      size_t to = (b & ~((size_t(1) << a) | (size_t(1) << bq))) | (bb << a) | (ba << bq);
      out.at(to, b) = one;
    }
  } else {
    throw std::invalid_argument("no dense form for gate " + name);
  }
  out.refresh_float();
  return out;
}

DenseOperator conjugate(const DenseOperator &g, const DenseOperator &m) {
  return g * m * g.adjoint();
}

DensePauliCoefficients pauli_coefficients(const DenseOperator &m) {
  DensePauliCoefficients out;
  out.n = m.num_qubits();
  out.exact = m.is_exact();
  out.rational = m.is_exact();
  auto pts = all_points(out.n);
  for (const auto &p : pts) {
    DenseOperator t = dense_pauli(PhasedPauli(0, p));
    if (m.is_exact()) {
      DenseOperator prod = t * m;
      QSqrt2 tr = prod.real_trace();
      out.exact_values.push_back(tr);
      out.values.push_back(tr.to_double());
      if (!tr.is_rational()) out.rational = false;
    } else {
      std::complex<double> acc = 0;
      size_t d = m.dim();
      for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) acc += t.fat(i, k) * m.fat(k, i);
      out.values.push_back(acc.real());
    }
  }
  return out;
}

DenseOperator reconstruct_terms(uint32_t n, const std::vector<std::pair<PauliPoint, Rational>> &terms) {
  DenseOperator acc = DenseOperator::zeros(n);
  for (const auto &[p, c] : terms) acc = acc + dense_pauli(PhasedPauli(0, p)).scaled(c);
  acc = acc.scaled(Rational(1, BigInt(1) << n));
  acc.refresh_float();
  return acc;
}

}  // namespace qpsim
