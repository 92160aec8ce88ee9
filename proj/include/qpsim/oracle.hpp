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

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qpsim/pauli.hpp"
#include "qpsim/rational.hpp"
#include "qpsim/tableau.hpp"

namespace qpsim {

/// Element of Q[zeta], zeta = e^{i pi/4}: c0 + c1 zeta + c2 zeta^2 + c3 zeta^3,
/// zeta^4 = -1. Covers all Clifford/Pauli matrix entries plus e^{i pi/4}
/// (so the |H> magic state is exact). i = zeta^2, 1/sqrt(2) = (zeta - zeta^3)/2.
struct Cyclo8 {
  Rational c[4];

  Cyclo8() = default;
  explicit Cyclo8(const Rational &r) { c[0] = r; }
  static Cyclo8 zero() { return Cyclo8(); }
  static Cyclo8 one() { return Cyclo8(Rational(1)); }
  static Cyclo8 i();
  static Cyclo8 zeta();          // e^{i pi/4}
  static Cyclo8 inv_sqrt2();     // (zeta - zeta^3)/2

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  Cyclo8 conj() const;
  std::complex<double> to_complex() const;

  friend Cyclo8 operator+(const Cyclo8 &a, const Cyclo8 &b);
  friend Cyclo8 operator-(const Cyclo8 &a, const Cyclo8 &b);
  friend Cyclo8 operator*(const Cyclo8 &a, const Cyclo8 &b);
  friend Cyclo8 operator*(const Rational &a, const Cyclo8 &b);
  friend bool operator==(const Cyclo8 &a, const Cyclo8 &b);
};

/// A real element u + v sqrt(2); the real subfield of Q[zeta].
struct QSqrt2 {
  Rational u, v;
  double to_double() const;
  bool is_rational() const { return v == 0; }
  friend bool operator==(const QSqrt2 &a, const QSqrt2 &b) { return a.u == b.u && a.v == b.v; }
};

/// Dense 2^n x 2^n operator. Entries are exact (Q[zeta]) whenever the inputs
/// allow it; a float mirror is always maintained, and operators built from
/// non-representable inputs (the |T> state) carry only the float form.
class DenseOperator {
 public:
  DenseOperator(uint32_t n, bool exact);

  uint32_t num_qubits() const { return n_; }
  size_t dim() const { return size_t(1) << n_; }
  bool is_exact() const { return exact_; }

  Cyclo8 &at(size_t r, size_t c);
  const Cyclo8 &at(size_t r, size_t c) const;
  std::complex<double> &fat(size_t r, size_t c) { return fm_[r * dim() + c]; }
  const std::complex<double> &fat(size_t r, size_t c) const { return fm_[r * dim() + c]; }

  /// Rebuilds the float mirror from exact entries.
  void refresh_float();

  static DenseOperator zeros(uint32_t n) { return DenseOperator(n, true); }
  static DenseOperator identity(uint32_t n);

  friend DenseOperator operator+(const DenseOperator &a, const DenseOperator &b);
  friend DenseOperator operator-(const DenseOperator &a, const DenseOperator &b);
  friend DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);
  DenseOperator scaled(const Rational &r) const;
  DenseOperator scaled_cyclo(const Cyclo8 &z) const;
  DenseOperator adjoint() const;
  DenseOperator kron(const DenseOperator &other) const;

  /// Exact trace (throws if not exact); trace of a Hermitian exact operator
  /// as an element of Q[sqrt2] via real_trace.
  Cyclo8 trace() const;
  QSqrt2 real_trace() const;
  std::complex<double> trace_float() const;

  bool equals_exact(const DenseOperator &other) const;
  double max_abs_diff(const DenseOperator &other) const;
  bool is_hermitian(double tol = 1e-12) const;

  /// Debug dump: "n=<n>" header, then row-major "re im" pairs.
  std::string dump() const;

 private:
  uint32_t n_;
  bool exact_;
  std::vector<Cyclo8> m_;
  std::vector<std::complex<double>> fm_;
};

/// Kronecker-product realization of i^k T_a under the phase convention,
/// exact. n <= 10.
DenseOperator dense_pauli(const PhasedPauli &p);

/// Projector Pi_I^r = (1/|I|) sum (-1)^{r(a)} T_a, dense and exact.
DenseOperator make_projector(const IsotropicSubspace &I);

/// Density operator of a product of named single-qubit states. Names:
/// 0, 1, +, -, H, T. |H> = (|0> + e^{i pi/4}|1>)/sqrt(2) is exact; |T>
/// (Bloch (1,1,1)/sqrt(3)) is float-only.
DenseOperator dense_state(const std::vector<std::string> &names);

/// Unitary of a named Clifford gate, exact.
DenseOperator dense_gate(const std::string &name, uint32_t n, const std::vector<uint32_t> &qubits);

/// g M g^dag where g is given by a gate sequence.
DenseOperator conjugate(const DenseOperator &g, const DenseOperator &m);

/// Pauli coefficient vector x_b = Tr(T_b M) over all_points(n).
/// Exact entries are elements of Q[sqrt2]; `rational` is true when all are
/// rational numbers.
struct DensePauliCoefficients {
  uint32_t n;
  bool exact;
  bool rational;
  std::vector<QSqrt2> exact_values;  // when exact
  std::vector<double> values;       // always
};
DensePauliCoefficients pauli_coefficients(const DenseOperator &m);

/// (1/2^n) sum c_b T_b from a flat term list, exact.
DenseOperator reconstruct_terms(uint32_t n, const std::vector<std::pair<PauliPoint, Rational>> &terms);

}  // namespace qpsim
