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

#include <vector>

#include "qpsim/rational.hpp"

namespace qpsim {

template <class Scalar>
struct LpTolerance {
  static Scalar eps();
};
template <>
struct LpTolerance<Rational> {
  static Rational eps() { return Rational(0); }
};
template <>
struct LpTolerance<double> {
  static double eps() { return 1e-9; }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Scalar>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Scalar objective{};
  std::vector<Scalar> x;     // primal values per variable
  std::vector<Scalar> dual;  // y per equality row (Farkas vector when infeasible)
};

/// min c.x subject to A x = b, x >= 0; A passed column-wise. Dense tableau
/// simplex, Bland's rule (anti-cycling), two phases; the dual vector is read
/// off the artificial columns of the final tableau.
template <class Scalar>
LpResult<Scalar> simplex_solve(const std::vector<std::vector<Scalar>> &cols,
                               const std::vector<Scalar> &b, const std::vector<Scalar> &c) {
  const Scalar eps = LpTolerance<Scalar>::eps();
  const size_t m = b.size();
  const size_t K = cols.size();
  for (const auto &col : cols)
    if (col.size() != m) throw std::invalid_argument("lp column size mismatch");
  if (c.size() != K) throw std::invalid_argument("lp cost size mismatch");

  // tableau: m rows x (K + m + 1); columns [vars | artificials | rhs]
  const size_t W = K + m + 1;
  std::vector<Scalar> T(m * W, Scalar(0));
  std::vector<int> rowsign(m, 1);
  for (size_t i = 0; i < m; ++i) {
    int sg = b[i] < Scalar(0) ? -1 : 1;
    rowsign[i] = sg;
    for (size_t j = 0; j < K; ++j) T[i * W + j] = sg < 0 ? Scalar(-cols[j][i]) : cols[j][i];
    T[i * W + K + i] = Scalar(1);
    T[i * W + K + m] = sg < 0 ? Scalar(-b[i]) : b[i];
  }
  std::vector<size_t> basis(m);
  std::vector<char> in_basis(K + m, 0);
  for (size_t i = 0; i < m; ++i) {
    basis[i] = K + i;
    in_basis[K + i] = 1;
  }

  auto run_phase = [&](const std::vector<Scalar> &cost, bool allow_artificial) -> bool {
    // Dantzig pricing while the objective improves, Bland's rule once it
    // stalls (degeneracy): terminates, and is fast on the typical case.
    // Returns false on unbounded.
    size_t limit = allow_artificial ? K + m : K;
    size_t stall = 0;
    const size_t stall_limit = 4 * m + 16;
    bool bland = false;
    for (;;) {
      size_t enter = W;
      Scalar best_rc = Scalar(0);
      for (size_t j = 0; j < limit; ++j) {
        if (in_basis[j]) continue;
        Scalar rc = cost[j];
        for (size_t i = 0; i < m; ++i) {
          const Scalar &tij = T[i * W + j];
          if (!(tij == Scalar(0))) rc -= cost[basis[i]] * tij;
        }
        if (rc < -eps) {
          if (bland) {
            enter = j;
            break;
          }
          if (enter == W || rc < best_rc) {
            enter = j;
            best_rc = rc;
          }
        }
      }
      if (enter == W) return true;  // optimal
      // ratio test, Bland tie-break on lowest basis index
      size_t leave = m;
      Scalar best{};
      for (size_t i = 0; i < m; ++i) {
        const Scalar &tie = T[i * W + enter];
        if (tie > eps) {
          Scalar ratio = T[i * W + K + m] / tie;
          if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave == m) return false;  // unbounded
      if (best == Scalar(0)) {
        if (++stall > stall_limit) bland = true;  // degenerate: switch rule
      } else {
        stall = 0;
        bland = false;
      }
      // pivot
      Scalar pv = T[leave * W + enter];
      for (size_t j = 0; j < W; ++j) T[leave * W + j] = T[leave * W + j] / pv;
      for (size_t i = 0; i < m; ++i) {
        if (i == leave) continue;
        Scalar f = T[i * W + enter];
        if (f == Scalar(0)) continue;
        for (size_t j = 0; j < W; ++j) T[i * W + j] -= f * T[leave * W + j];
      }
      in_basis[basis[leave]] = 0;
      in_basis[enter] = 1;
      basis[leave] = enter;
    }
  };

  LpResult<Scalar> out;
  auto dual_from = [&](const std::vector<Scalar> &cost) {
    std::vector<Scalar> y(m, Scalar(0));
    for (size_t j = 0; j < m; ++j) {
      Scalar v(0);
      for (size_t i = 0; i < m; ++i) {
        const Scalar &tij = T[i * W + K + j];
        if (!(tij == Scalar(0))) v += cost[basis[i]] * tij;
      }
      y[j] = rowsign[j] < 0 ? Scalar(-v) : v;
    }
    return y;
  };

  // phase 1
  std::vector<Scalar> cost1(K + m, Scalar(0));
  for (size_t i = 0; i < m; ++i) cost1[K + i] = Scalar(1);
  if (!run_phase(cost1, true)) throw std::logic_error("phase-1 unbounded");
  Scalar art(0);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= K) art += T[i * W + K + m];
  if (art > (std::is_same_v<Scalar, Rational> ? Scalar(0) : Scalar(1e-7))) {
    out.status = LpStatus::Infeasible;
    out.objective = art;
    out.dual = dual_from(cost1);  // Farkas: y.b > 0, y.A <= 0
    return out;
  }
  // drive artificials out of the basis where possible
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < K) continue;
    size_t enter = W;
    for (size_t j = 0; j < K; ++j)
      if (T[i * W + j] > eps || T[i * W + j] < -eps) {
        enter = j;
        break;
      }
    if (enter == W) continue;  // redundant row; artificial stays basic at zero
    Scalar pv = T[i * W + enter];
    for (size_t j = 0; j < W; ++j) T[i * W + j] = T[i * W + j] / pv;
    for (size_t r = 0; r < m; ++r) {
      if (r == i) continue;
      Scalar f = T[r * W + enter];
      if (f == Scalar(0)) continue;
      for (size_t j = 0; j < W; ++j) T[r * W + j] -= f * T[i * W + j];
    }
    in_basis[basis[i]] = 0;
    in_basis[enter] = 1;
    basis[i] = enter;
  }

  // phase 2 (artificial columns blocked from entering)
  std::vector<Scalar> cost2(K + m, Scalar(0));
  for (size_t j = 0; j < K; ++j) cost2[j] = c[j];
  if (!run_phase(cost2, false)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x.assign(K, Scalar(0));
  Scalar obj(0);
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < K) {
      out.x[basis[i]] = T[i * W + K + m];
      obj += c[basis[i]] * T[i * W + K + m];
    }
  }
  out.objective = obj;
  out.dual = dual_from(cost2);
  return out;
}

}  // namespace qpsim
