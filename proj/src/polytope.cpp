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

#include "qpsim/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpsim {

namespace {

// Active-set bitset sized at construction.
struct ActiveSet {
  std::vector<uint64_t> w;
  explicit ActiveSet(size_t bits) : w((bits + 63) / 64, 0) {}
  void set(size_t i) { w[i >> 6] |= 1ull << (i & 63); }
  friend ActiveSet intersect(const ActiveSet &a, const ActiveSet &b) {
    ActiveSet out(a.w.size() * 64);
    for (size_t i = 0; i < a.w.size(); ++i) out.w[i] = a.w[i] & b.w[i];
    return out;
  }
  // a subset of b?
  static bool subset(const ActiveSet &a, const ActiveSet &b) {
    for (size_t i = 0; i < a.w.size(); ++i)
      if (a.w[i] & ~b.w[i]) return false;
    return true;
  }
  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
  }
};

struct HomVertex {
  BigInt w;                 // positive
  std::vector<BigInt> v;    // coordinates scaled by w
  ActiveSet active;
};

void normalize(HomVertex &h) {
  BigInt g = h.w < 0 ? -h.w : h.w;
  for (const auto &x : h.v) g = boost::multiprecision::gcd(g, x < 0 ? BigInt(-x) : x);
  if (g > 1) {
    h.w /= g;
    for (auto &x : h.v) x /= g;
  }
}

}  // namespace

std::vector<std::vector<Rational>> dd_vertices(const std::vector<Halfspace> &system, int dim,
                                               long box_bound) {
  if (dim <= 0) throw std::invalid_argument("dd_vertices: dimension must be positive");
  for (const auto &h : system)
    if ((int)h.a.size() != dim) throw std::invalid_argument("dd_vertices: halfspace dimension mismatch");

  // Containing simplex: x_j >= -(B+1) for each j, and sum x <= d(B+1).
  long B = box_bound + 1;
  std::vector<Halfspace> full;
  for (int j = 0; j < dim; ++j) {
    Halfspace h;
    h.a.assign(dim, 0);
    h.a[j] = 1;
    h.b = B;
    full.push_back(h);
  }
  {
    Halfspace h;
    h.a.assign(dim, -1);
    h.b = BigInt(dim) * B;
    full.push_back(h);
  }
  for (const auto &h : system) full.push_back(h);

  size_t m = full.size();
  std::vector<HomVertex> verts;
  // Simplex vertices: all-(-B); and for each k: x = -B except x_k = dB + (d-1)B = (2d-1)B.
  {
    HomVertex h{1, std::vector<BigInt>(dim, -B), ActiveSet(m)};
    for (int j = 0; j < dim; ++j) h.active.set(j);
    verts.push_back(std::move(h));
    for (int k = 0; k < dim; ++k) {
      HomVertex hv{1, std::vector<BigInt>(dim, -B), ActiveSet(m)};
      hv.v[k] = BigInt(2 * dim - 1) * B;
      for (int j = 0; j < dim; ++j)
        if (j != k) hv.active.set(j);
      hv.active.set(dim);
      verts.push_back(std::move(hv));
    }
  }

  auto value = [&](const Halfspace &h, const HomVertex &x) {
    BigInt s = h.b * x.w;
    for (int j = 0; j < dim; ++j)
      if (h.a[j] != 0) s += h.a[j] * x.v[j];
    return s;
  };

  for (size_t gi = dim + 1; gi < m; ++gi) {
    const Halfspace &h = full[gi];
    std::vector<BigInt> vals(verts.size());
    bool any_neg = false;
    for (size_t i = 0; i < verts.size(); ++i) {
      vals[i] = value(h, verts[i]);
      if (vals[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t i = 0; i < verts.size(); ++i)
        if (vals[i] == 0) verts[i].active.set(gi);
      continue;
    }
    std::vector<size_t> pos, neg, zer;
    for (size_t i = 0; i < verts.size(); ++i) {
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] < 0)
        neg.push_back(i);
      else
        zer.push_back(i);
    }
    std::vector<HomVertex> fresh;
    for (size_t ip : pos) {
      for (size_t in : neg) {
        ActiveSet common = intersect(verts[ip].active, verts[in].active);
        if (common.count() + 1 < (size_t)dim) continue;  // cannot define an edge
        bool adjacent = true;
        for (size_t iw = 0; iw < verts.size(); ++iw) {
          if (iw == ip || iw == in) continue;
          if (ActiveSet::subset(common, verts[iw].active)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        HomVertex nv{vals[ip] * verts[in].w - vals[in] * verts[ip].w, std::vector<BigInt>(dim),
                     common};
        for (int j = 0; j < dim; ++j) nv.v[j] = vals[ip] * verts[in].v[j] - vals[in] * verts[ip].v[j];
        normalize(nv);
        nv.active.set(gi);
        fresh.push_back(std::move(nv));
      }
    }
    std::vector<HomVertex> next;
    next.reserve(zer.size() + pos.size() + fresh.size());
    for (size_t i : zer) {
      verts[i].active.set(gi);
      next.push_back(std::move(verts[i]));
    }
    for (size_t i : pos) next.push_back(std::move(verts[i]));
    for (auto &nv : fresh) next.push_back(std::move(nv));
    verts.swap(next);
  }

  std::vector<std::vector<Rational>> out;
  out.reserve(verts.size());
  for (const auto &hv : verts) {
    std::vector<Rational> x(dim);
    for (int j = 0; j < dim; ++j) x[j] = Rational(hv.v[j], hv.w);
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qpsim
