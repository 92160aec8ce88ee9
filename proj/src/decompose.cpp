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

#include "qpsim/decompose.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qpsim/lp.hpp"

namespace qpsim {

PauliVector PauliVector::from_exact(uint32_t n, std::vector<Rational> values) {
  if (values.size() != (size_t(1) << (2 * n))) throw std::invalid_argument("pauli vector size");
  if (values[0] != 1) throw std::invalid_argument("unit-trace state needs coefficient 1 at identity");
  PauliVector v;
  v.n = n;
  v.exact = true;
  v.fx.reserve(values.size());
  for (const auto &r : values) v.fx.push_back(to_double(r));
  v.rx = std::move(values);
  return v;
}

PauliVector PauliVector::from_float(uint32_t n, std::vector<double> values) {
  if (values.size() != (size_t(1) << (2 * n))) throw std::invalid_argument("pauli vector size");
  if (std::abs(values[0] - 1.0) > 1e-9) throw std::invalid_argument("unit-trace state needs coefficient 1 at identity");
  PauliVector v;
  v.n = n;
  v.exact = false;
  v.fx = std::move(values);
  return v;
}

PauliVector PauliVector::from_operator(const PhasePointOperator &op) {
  std::vector<Rational> values(size_t(1) << (2 * op.n), Rational(0));
  for (const auto &[p, c] : op.terms) values[p.key()] = c;
  return from_exact(op.n, std::move(values));
}

std::string QuasiDecomposition::to_records(const std::vector<PhasePointOperator> &ops) const {
  std::ostringstream os;
  os << "feasible " << (feasible ? 1 : 0) << "\n";
  if (!feasible) {
    os << "farkas";
    for (double y : dual) os << " " << y;
    os << "\n";
    return os.str();
  }
  if (exact)
    os << "objective " << rational_str(one_norm_exact) << "\n";
  else
    os << "objective " << one_norm << "\n";
  for (size_t i = 0; i < weights.size(); ++i) {
    os << "weight " << weights[i].first << " ";
    if (exact)
      os << rational_str(weights_exact[i].second);
    else
      os << weights[i].second;
    os << " support " << ops[weights[i].first].terms.size() << "\n";
  }
  os << "dual";
  if (exact)
    for (const auto &y : dual_exact) os << " " << rational_str(y);
  else
    for (double y : dual) os << " " << y;
  os << "\n";
  os << "dual_certified " << (dual_certified ? 1 : 0) << "\n";
  return os.str();
}

namespace {

template <class Scalar>
std::vector<Scalar> op_column(const PhasePointOperator &op, size_t dim);

template <>
std::vector<Rational> op_column<Rational>(const PhasePointOperator &op, size_t dim) {
  std::vector<Rational> col(dim, Rational(0));
  for (const auto &[p, c] : op.terms) col[p.key()] = c;
  return col;
}

template <>
std::vector<double> op_column<double>(const PhasePointOperator &op, size_t dim) {
  std::vector<double> col(dim, 0.0);
  for (const auto &[p, c] : op.terms) col[p.key()] = to_double(c);
  return col;
}

bool use_exact(const PauliVector &rho, size_t ncols, const DecomposeOptions &opts) {
  return opts.prefer_exact && rho.exact && ncols <= opts.exact_max_columns;
}

}  // namespace

QuasiDecomposition decompose_nonnegative(const PauliVector &rho,
                                         const std::vector<PhasePointOperator> &ops,
                                         const DecomposeOptions &opts) {
  if (ops.empty()) throw std::invalid_argument("empty generating set");
  for (const auto &op : ops)
    if (op.n != rho.n) throw std::invalid_argument("operator/state dimension mismatch");
  size_t dim = rho.dim();
  QuasiDecomposition out;
  if (use_exact(rho, ops.size(), opts)) {
    std::vector<std::vector<Rational>> cols;
    cols.reserve(ops.size());
    for (const auto &op : ops) cols.push_back(op_column<Rational>(op, dim));
    auto res = simplex_solve<Rational>(cols, rho.rx, std::vector<Rational>(ops.size(), Rational(0)));
    out.exact = true;
    out.feasible = res.status == LpStatus::Optimal;
    for (const auto &y : res.dual) out.dual.push_back(to_double(y));
    out.dual_exact = res.dual;
    if (out.feasible) {
      out.nonnegative = true;
      out.one_norm_exact = 1;
      out.one_norm = 1;
      for (size_t j = 0; j < ops.size(); ++j)
        if (res.x[j] != 0) {
          out.weights.emplace_back(j, to_double(res.x[j]));
          out.weights_exact.emplace_back(j, res.x[j]);
        }
      out.dual_certified = true;
    }
    return out;
  }
  std::vector<std::vector<double>> cols;
  cols.reserve(ops.size());
  for (const auto &op : ops) cols.push_back(op_column<double>(op, dim));
  auto res = simplex_solve<double>(cols, rho.fx, std::vector<double>(ops.size(), 0.0));
  out.feasible = res.status == LpStatus::Optimal;
  out.dual = res.dual;
  if (out.feasible) {
    out.nonnegative = true;
    out.one_norm = 1;
    for (size_t j = 0; j < ops.size(); ++j)
      if (std::abs(res.x[j]) > opts.tol * 1e-3) out.weights.emplace_back(j, res.x[j]);
    out.dual_certified = true;
  }
  return out;
}

namespace {

template <class Scalar>
void solve_robustness(const PauliVector &rho, const std::vector<PhasePointOperator> &ops,
                      const DecomposeOptions &opts, QuasiDecomposition &out) {
  size_t dim = rho.dim();
  size_t K = ops.size();
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(2 * K);
  for (const auto &op : ops) cols.push_back(op_column<Scalar>(op, dim));
  for (size_t j = 0; j < K; ++j) {
    std::vector<Scalar> neg = cols[j];
    for (auto &v : neg) v = -v;
    cols.push_back(std::move(neg));
  }
  std::vector<Scalar> b;
  if constexpr (std::is_same_v<Scalar, Rational>)
    b = rho.rx;
  else
    b.assign(rho.fx.begin(), rho.fx.end());
  auto res = simplex_solve<Scalar>(cols, b, std::vector<Scalar>(2 * K, Scalar(1)));
  out.exact = std::is_same_v<Scalar, Rational>;
  out.feasible = res.status == LpStatus::Optimal;
  if (!out.feasible) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      out.dual_exact = res.dual;
      for (const auto &y : res.dual) out.dual.push_back(to_double(y));
    } else {
      out.dual.assign(res.dual.begin(), res.dual.end());
    }
    return;
  }
  // weights, objective
  std::vector<Scalar> w(K, Scalar(0));
  for (size_t j = 0; j < K; ++j) w[j] = res.x[j] - res.x[K + j];
  bool nonneg = true;
  for (size_t j = 0; j < K; ++j) {
    if (w[j] == Scalar(0)) continue;
    if (w[j] < Scalar(0)) nonneg = false;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      out.weights.emplace_back(j, to_double(w[j]));
      out.weights_exact.emplace_back(j, w[j]);
    } else {
      if (std::abs(w[j]) > 1e-12) out.weights.emplace_back(j, w[j]);
    }
  }
  out.nonnegative = nonneg;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    out.one_norm_exact = res.objective;
    out.one_norm = to_double(res.objective);
    out.dual_exact = res.dual;
    for (const auto &y : res.dual) out.dual.push_back(to_double(y));
    // certify: dual feasibility |y . col_j| <= 1 and matching objective
    bool ok = true;
    for (size_t j = 0; j < K && ok; ++j) {
      Rational dot = 0;
      for (const auto &[p, c] : ops[j].terms) dot += res.dual[p.key()] * c;
      if (dot > 1 || dot < -1) ok = false;
    }
    Rational gap = 0;
    for (size_t i = 0; i < b.size(); ++i) gap += res.dual[i] * b[i];
    ok = ok && (gap == res.objective);
    out.dual_certified = ok;
  } else {
    out.one_norm = res.objective;
    out.dual = res.dual;
    bool ok = true;
    for (size_t j = 0; j < K && ok; ++j) {
      double dot = 0;
      for (const auto &[p, c] : ops[j].terms) dot += res.dual[p.key()] * to_double(c);
      if (std::abs(dot) > 1 + opts.tol) ok = false;
    }
    double gap = 0;
    for (size_t i = 0; i < b.size(); ++i) gap += res.dual[i] * b[i];
    ok = ok && std::abs(gap - res.objective) <= opts.tol * (1 + std::abs(res.objective));
    out.dual_certified = ok;
  }
}

}  // namespace

QuasiDecomposition robustness(const PauliVector &rho, const std::vector<PhasePointOperator> &ops,
                              const DecomposeOptions &opts) {
  if (ops.empty()) throw std::invalid_argument("empty generating set");
  for (const auto &op : ops)
    if (op.n != rho.n) throw std::invalid_argument("operator/state dimension mismatch");
  QuasiDecomposition out;
  if (use_exact(rho, 2 * ops.size(), opts))
    solve_robustness<Rational>(rho, ops, opts, out);
  else
    solve_robustness<double>(rho, ops, opts, out);
  return out;
}

QuasiDecomposition robustness_of_magic(const PauliVector &rho, const DecomposeOptions &opts) {
  std::vector<PhasePointOperator> ops;
  for (const auto &stab : stabilizer_family(rho.n)) ops.push_back(stabilizer_operator(stab));
  return robustness(rho, ops, opts);
}

double two_point_negativity(const std::vector<double> &a, const std::vector<double> &b,
                            const std::vector<double> &c) {
  if (a.size() != b.size() || a.size() != c.size())
    throw std::invalid_argument("two_point_negativity dimension mismatch");
  auto dist = [](const std::vector<double> &u, const std::vector<double> &v) {
    double s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += (u[i] - v[i]) * (u[i] - v[i]);
    return std::sqrt(s);
  };
  double ab = dist(a, b), ac = dist(a, c), bc = dist(b, c);
  if (ab < 1e-15) throw std::invalid_argument("a and b coincide");
  // collinearity: c = a + t (b - a) with residual below tolerance
  double t = 0, nn = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    t += (c[i] - a[i]) * (b[i] - a[i]);
    nn += (b[i] - a[i]) * (b[i] - a[i]);
  }
  t /= nn;
  double resid = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double r = c[i] - a[i] - t * (b[i] - a[i]);
    resid += r * r;
  }
  if (std::sqrt(resid) > 1e-9 * (1 + ab + ac + bc))
    throw std::invalid_argument("points are not collinear");
  if (t >= -1e-12 && t <= 1 + 1e-12)
    throw std::invalid_argument("c lies inside the segment [a, b]");
  return (ac + bc) / ab;
}

Rational vertex_robustness_bound(uint32_t n) { return Rational(BigInt(n) * (2 * n + 1), 2) + 1; }

VertexGeometryReport vertex_geometry_report(uint32_t n) {
  VertexGeometryReport r{};
  double s2 = n * (2.0 * n + 1) / 4.0;  // half-coordinates: entries 1/2
  double s = std::sqrt(s2);
  r.half_bc = s;
  r.half_ab = 1.0 / s;
  r.half_ac = s + 1.0 / s;
  r.half_value = (r.half_ac + r.half_bc) / r.half_ab;  // = n(2n+1)/2 + 1
  double t2 = (2.0 * n + 1) / n;  // Pauli coordinates: entries 1/n, n(2n+1) of them
  double t = std::sqrt(t2);
  r.pauli_bc = t;
  r.pauli_ab = 1.0 / t;
  r.pauli_ac = t + 1.0 / t;
  r.pauli_value = (r.pauli_ac + r.pauli_bc) / r.pauli_ab;  // = 2(2n+1)/n + 1
  return r;
}

CountingBoundResult counting_bound_check(uint32_t n, uint32_t m) {
  using F = boost::multiprecision::cpp_bin_float_100;
  if (m < 1 || m > n) throw std::invalid_argument("counting_bound_check requires 1 <= m <= n");
  F log2e = F(1) / boost::multiprecision::log(F(2));
  auto lg2 = [&](const F &x) { return boost::multiprecision::log(x) * log2e; };
  BigInt f = f_counting(n, m);
  F lhs = F(n) + lg2(F(f));
  auto xlgx = [&](uint32_t k) { return k == 0 ? F(0) : F(k) * lg2(F(k)); };
  F rhs = xlgx(m) + xlgx(n - m) + (F(2) - log2e) * F(n) - log2e / 6;
  CountingBoundResult out;
  out.lhs = lhs.convert_to<double>();
  out.rhs = rhs.convert_to<double>();
  out.margin = (lhs - rhs).convert_to<double>();
  out.holds = lhs >= rhs;
  out.lhs_exceeds_2n = lhs > F(2) * F(n);
  return out;
}

}  // namespace qpsim
