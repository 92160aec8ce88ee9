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

#include "qpsim/phasespace.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qpsim/linalg.hpp"
#include "qpsim/polytope.hpp"

namespace qpsim {

void PhasePointOperator::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto &l, const auto &r) { return l.first < r.first; });
  for (size_t i = 0; i + 1 < terms.size(); ++i)
    if (terms[i].first == terms[i + 1].first)
      throw std::invalid_argument("duplicate support point");
  if (terms.empty() || !terms.front().first.is_zero() || terms.front().second != 1)
    throw std::invalid_argument("operator must carry identity with coefficient 1");
  for (const auto &[p, c] : terms)
    if (p.n != n) throw std::invalid_argument("support point qubit count mismatch");
}

Rational PhasePointOperator::coefficient(const PauliPoint &p) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), p,
                             [](const auto &t, const PauliPoint &q) { return t.first < q; });
  if (it != terms.end() && it->first == p) return it->second;
  return Rational(0);
}

std::vector<PauliPoint> PhasePointOperator::support_star() const {
  std::vector<PauliPoint> out;
  for (const auto &[p, c] : terms)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

std::string PhasePointOperator::dedup_key() const {
  std::ostringstream os;
  for (const auto &[p, c] : terms) os << p.key() << ":" << rational_str(c) << ";";
  return os.str();
}

std::string PhasePointOperator::to_text() const {
  std::ostringstream os;
  os << "n=" << n << "\n";
  for (const auto &[p, c] : terms)
    os << rational_str(c) << "\t" << to_string(PhasedPauli(0, p)).substr(1) << "\n";
  return os.str();
}

PhasePointOperator PhasePointOperator::from_text(const std::string &text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("n=", 0) != 0)
    throw std::invalid_argument("operator text must start with n=<n>");
  PhasePointOperator op;
  op.n = (uint32_t)std::stoul(line.substr(2));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::invalid_argument("operator line missing tab: " + line);
    Rational c = parse_rational(line.substr(0, tab));
    PhasedPauli p = parse_pauli(line.substr(tab + 1));
    if (p.phase != 0) throw std::invalid_argument("operator pauli must be unsigned: " + line);
    op.terms.emplace_back(p.pt, c);
  }
  op.normalize();
  return op;
}

bool PhasePointOperator::constructive_matches() const {
  if (!constructive) return true;
  const auto &cf = *constructive;
  // expand: g ( sum_j c_j T_j * Pi_tail ) g^dag, all on the full register
  IsotropicSubspace tail(n);
  for (const auto &[p, s] : cf.tail) tail.add(p, s);
  std::map<uint64_t, Rational> flat;
  for (const auto &[j, c] : cf.core) {
    for (const auto &[t, s] : tail.span_elements()) {
      PhasedPauli prod = mul(PhasedPauli(s ? 2 : 0, t), PhasedPauli(0, j));
      PhasedPauli img = cf.g.apply(prod);
      if (!img.hermitian()) return false;
      Rational add = c * (img.sign_bit() ? -1 : 1);
      flat[img.pt.key()] += add;
    }
  }
  for (const auto &[p, c] : terms) {
    auto it = flat.find(p.key());
    Rational v = (it == flat.end()) ? Rational(0) : it->second;
    if (v != c) return false;
    if (it != flat.end()) flat.erase(it);
  }
  for (const auto &[key, c] : flat)
    if (c != 0) return false;
  return true;
}

bool is_closed_under_inference(const std::vector<PauliPoint> &omega) {
  std::set<uint64_t> keys;
  for (const auto &p : omega) keys.insert(p.key());
  for (size_t i = 0; i < omega.size(); ++i)
    for (size_t j = i; j < omega.size(); ++j)
      if (symplectic(omega[i], omega[j]) == 0 && !keys.count((omega[i] ^ omega[j]).key()))
        return false;
  return true;
}

namespace {

struct Gf2System {
  // rows over |omega| variables, packed in uint64 words, with rhs bit
  size_t nvars;
  std::vector<std::pair<std::vector<uint64_t>, int>> rows;

  explicit Gf2System(size_t nv) : nvars(nv) {}
  void add_row(const std::vector<size_t> &vars, int rhs) {
    std::vector<uint64_t> w((nvars + 63) / 64, 0);
    for (size_t v : vars) w[v >> 6] ^= 1ull << (v & 63);
    rows.emplace_back(std::move(w), rhs & 1);
  }
  // returns {solvable, particular, free_var_list, null_basis}
  struct Solution {
    bool ok = false;
    std::vector<int> particular;
    std::vector<std::vector<int>> null_basis;
  };
  Solution solve() {
    size_t words = (nvars + 63) / 64;
    auto get = [&](const std::vector<uint64_t> &w, size_t v) { return (w[v >> 6] >> (v & 63)) & 1; };
    std::vector<int> pivot_of_row;
    size_t r = 0;
    for (size_t c = 0; c < nvars && r < rows.size(); ++c) {
      size_t piv = r;
      while (piv < rows.size() && !get(rows[piv].first, c)) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[r], rows[piv]);
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i != r && get(rows[i].first, c)) {
          for (size_t w = 0; w < words; ++w) rows[i].first[w] ^= rows[r].first[w];
          rows[i].second ^= rows[r].second;
        }
      }
      pivot_of_row.push_back((int)c);
      ++r;
    }
    Solution sol;
    for (size_t i = r; i < rows.size(); ++i) {
      bool zero = true;
      for (uint64_t w : rows[i].first)
        if (w) zero = false;
      if (zero && rows[i].second) return sol;  // inconsistent
    }
    sol.ok = true;
    sol.particular.assign(nvars, 0);
    std::vector<char> is_pivot(nvars, 0);
    for (size_t i = 0; i < pivot_of_row.size(); ++i) {
      is_pivot[pivot_of_row[i]] = 1;
      sol.particular[pivot_of_row[i]] = rows[i].second;
    }
    for (size_t c = 0; c < nvars; ++c) {
      if (is_pivot[c]) continue;
      std::vector<int> vec(nvars, 0);
      vec[c] = 1;
      for (size_t i = 0; i < pivot_of_row.size(); ++i)
        if (get(rows[i].first, c)) vec[pivot_of_row[i]] = 1;
      sol.null_basis.push_back(std::move(vec));
    }
    return sol;
  }
};

Gf2System gamma_system(const std::vector<PauliPoint> &omega) {
  std::map<uint64_t, size_t> idx;
  for (size_t i = 0; i < omega.size(); ++i) idx[omega[i].key()] = i;
  Gf2System sys(omega.size());
  for (size_t i = 0; i < omega.size(); ++i)
    for (size_t j = i; j < omega.size(); ++j) {
      if (symplectic(omega[i], omega[j]) != 0) continue;
      auto it = idx.find((omega[i] ^ omega[j]).key());
      if (it == idx.end()) throw std::invalid_argument("omega not closed under inference");
      std::vector<size_t> vars;
      for (size_t v : {i, j, it->second}) vars.push_back(v);
      // duplicated vars cancel mod 2 inside add_row
      sys.add_row(vars, beta(omega[i], omega[j]));
    }
  auto zit = idx.find(PauliPoint::zero(omega.empty() ? 1 : omega[0].n).key());
  if (zit == idx.end()) throw std::invalid_argument("omega must contain the identity");
  sys.add_row({zit->second}, 0);
  return sys;
}

}  // namespace

std::optional<std::vector<int>> find_gamma(const std::vector<PauliPoint> &omega) {
  auto sys = gamma_system(omega);
  auto sol = sys.solve();
  if (!sol.ok) return std::nullopt;
  return sol.particular;
}

PhasePointOperator make_cnc_operator(const CncLabel &label) {
  if (label.omega.size() != label.gamma.size())
    throw std::invalid_argument("omega/gamma size mismatch");
  if (!is_closed_under_inference(label.omega))
    throw std::invalid_argument("omega not closed under inference");
  // validate gamma on every commuting pair
  for (size_t i = 0; i < label.omega.size(); ++i) {
    if (label.omega[i].is_zero() && (label.gamma[i] & 1) != 0)
      throw std::invalid_argument("gamma(0) must be 0");
    for (size_t j = i; j < label.omega.size(); ++j) {
      if (symplectic(label.omega[i], label.omega[j]) != 0) continue;
      PauliPoint sum = label.omega[i] ^ label.omega[j];
      size_t k = 0;
      bool found = false;
      for (; k < label.omega.size(); ++k)
        if (label.omega[k] == sum) {
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("omega not closed under inference");
      int want = beta(label.omega[i], label.omega[j]);
      if (((label.gamma[i] + label.gamma[j] + label.gamma[k]) & 1) != want)
        throw std::invalid_argument("gamma violates the noncontextuality condition");
    }
  }
  PhasePointOperator op;
  op.n = label.n;
  for (size_t i = 0; i < label.omega.size(); ++i)
    op.terms.emplace_back(label.omega[i], Rational((label.gamma[i] & 1) ? -1 : 1));
  op.normalize();
  return op;
}

std::vector<PhasedPauli> jordan_wigner_majoranas(uint32_t N) {
  if (N < 1) throw std::invalid_argument("need at least one operator");
  if (N == 1) return {PhasedPauli(0, pt_x(1, 0))};
  uint32_t qubits = (N % 2 == 0) ? N / 2 : (N - 1) / 2;
  std::vector<PhasedPauli> out;
  for (uint32_t j = 1; j <= (N - N % 2) / 2; ++j) {
    uint64_t zmask = (j >= 2) ? ((1ull << (j - 1)) - 1) : 0;
    out.emplace_back(0, PauliPoint(qubits, zmask, 1ull << (j - 1)));                    // Z..Z X_j
    out.emplace_back(0, PauliPoint(qubits, zmask | (1ull << (j - 1)), 1ull << (j - 1)));  // Z..Z Y_j
  }
  if (N % 2 == 1) out.emplace_back(0, PauliPoint(qubits, (1ull << qubits) - 1, 0));  // Z..Z
  return out;
}

std::vector<PauliPoint> edge_products(const std::vector<PhasedPauli> &majoranas) {
  for (size_t i = 0; i < majoranas.size(); ++i) {
    if (!majoranas[i].hermitian()) throw std::invalid_argument("majorana not hermitian");
    for (size_t j = i + 1; j < majoranas.size(); ++j)
      if (symplectic(majoranas[i].pt, majoranas[j].pt) != 1)
        throw std::invalid_argument("majorana set not pairwise anticommuting");
  }
  std::vector<PauliPoint> out;
  for (size_t i = 0; i < majoranas.size(); ++i)
    for (size_t j = i + 1; j < majoranas.size(); ++j) {
      PhasedPauli prod = mul(majoranas[i], majoranas[j]);
      // product of two anticommuting Hermitian elements has odd phase;
      // +-i C_i C_j is Hermitian and we canonicalize to +T_b
      if (prod.phase % 2 == 0) throw std::logic_error("edge product phase not odd");
      out.push_back(prod.pt);
    }
  return out;
}

PhasePointOperator make_majorana_pair_operator(const MajoranaPairLabel &label) {
  uint32_t n = label.n;
  if (label.majoranas.size() != 2 * n + 1)
    throw std::invalid_argument("pair-product label needs 2n+1 majoranas");
  auto prods = edge_products(label.majoranas);
  std::set<uint64_t> distinct;
  for (const auto &p : prods) {
    if (p.is_zero()) throw std::invalid_argument("zero edge product");
    distinct.insert(p.key());
  }
  if (distinct.size() != n * (2 * n + 1))
    throw std::invalid_argument("edge-product support has wrong size");
  // frustration structure: products anticommute iff the index pairs share
  // exactly one element, i.e. the graph is L(K_{2n+1})
  size_t idx_i = 0;
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < label.majoranas.size(); ++i)
    for (size_t j = i + 1; j < label.majoranas.size(); ++j) pairs.emplace_back(i, j);
  for (size_t a = 0; a < prods.size(); ++a)
    for (size_t b = a + 1; b < prods.size(); ++b) {
      auto [i1, j1] = pairs[a];
      auto [i2, j2] = pairs[b];
      int shared = (i1 == i2) + (i1 == j2) + (j1 == i2) + (j1 == j2);
      if (symplectic(prods[a], prods[b]) != (shared == 1 ? 1 : 0))
        throw std::invalid_argument("frustration graph is not L(K_{2n+1})");
    }
  (void)idx_i;
  PhasePointOperator op;
  op.n = n;
  op.terms.emplace_back(PauliPoint::zero(n), Rational(1));
  for (size_t e = 0; e < prods.size(); ++e) {
    int sgn = (label.eta >> e) & 1;
    op.terms.emplace_back(prods[e], Rational(sgn ? -1 : 1, n));
  }
  op.normalize();
  return op;
}

Rational stabilizer_inner_product(const PhasePointOperator &a, const IsotropicSubspace &i) {
  if (i.dim() != a.n) throw std::invalid_argument("stabilizer_inner_product needs a maximal subspace");
  Rational s = 0;
  for (const auto &[p, r] : i.span_elements()) {
    Rational c = a.coefficient(p);
    if (c != 0) s += (r ? -c : c);
  }
  return s / (BigInt(1) << a.n);
}

const std::vector<IsotropicSubspace> &stabilizer_family(uint32_t n, uint32_t cap) {
  static std::mutex mu;
  static std::map<uint32_t, std::vector<IsotropicSubspace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_stabilizer_projectors(n, cap)).first;
  return it->second;
}

MembershipResult lambda_membership_serial(const PhasePointOperator &a, uint32_t cap) {
  const auto &fam = stabilizer_family(a.n, cap);
  MembershipResult res;
  for (size_t i = 0; i < fam.size(); ++i) {
    Rational v = stabilizer_inner_product(a, fam[i]);
    if (res.minimizer < 0 || v < res.min_inner_product) {
      res.min_inner_product = v;
      res.minimizer = (int)i;
    }
  }
  res.member = res.min_inner_product >= 0;
  return res;
}

MembershipResult lambda_membership(const PhasePointOperator &a, bool parallel, uint32_t cap) {
  if (!parallel) return lambda_membership_serial(a, cap);
  const auto &fam = stabilizer_family(a.n, cap);
  MembershipResult res;
#pragma omp parallel
  {
    MembershipResult local;
#pragma omp for nowait schedule(static)
    for (long i = 0; i < (long)fam.size(); ++i) {
      Rational v = stabilizer_inner_product(a, fam[i]);
      if (local.minimizer < 0 || v < local.min_inner_product) {
        local.min_inner_product = v;
        local.minimizer = (int)i;
      }
    }
#pragma omp critical
    {
      if (local.minimizer >= 0 &&
          (res.minimizer < 0 || local.min_inner_product < res.min_inner_product ||
           (local.min_inner_product == res.min_inner_product && local.minimizer < res.minimizer)))
        res = local;
    }
  }
  res.member = res.min_inner_product >= 0;
  return res;
}

VertexCheckResult vertex_check(const PhasePointOperator &a, uint32_t cap) {
  VertexCheckResult out;
  out.required_rank = (size_t(1) << (2 * a.n)) - 1;
  const auto &fam = stabilizer_family(a.n, cap);
  std::vector<std::vector<BigInt>> rows;
  Rational mn;
  bool first = true;
  for (const auto &stab : fam) {
    Rational v = stabilizer_inner_product(a, stab);
    if (first || v < mn) {
      mn = v;
      first = false;
    }
    if (v == 0) {
      std::vector<BigInt> row(out.required_rank, 0);
      for (const auto &[p, r] : stab.span_elements()) {
        if (p.is_zero()) continue;
        row[p.key() - 1] = r ? -1 : 1;
      }
      rows.push_back(std::move(row));
    }
  }
  out.in_lambda = mn >= 0;
  if (!out.in_lambda) return out;
  out.orthogonal_count = (int)rows.size();
  out.rank = exact_rank(std::move(rows));
  out.is_vertex = out.rank == out.required_rank;
  return out;
}

namespace {

/// Precomputed scan data for pair-product sign searches over a fixed JW support.
struct MajoranaPairScanner {
  uint32_t n;
  std::vector<PhasedPauli> majoranas;
  std::vector<PauliPoint> prods;
  size_t num_edges;
  // per stabilizer: (edge index, r value) intersection pairs
  std::vector<std::vector<std::pair<int, int>>> inter;
  // per stabilizer: row pattern over 4^n-1 coords as (col, sign) pairs
  std::vector<std::vector<std::pair<int, int>>> row_pat;

  explicit MajoranaPairScanner(uint32_t n_) : MajoranaPairScanner(n_, jordan_wigner_majoranas(2 * n_ + 1)) {}

  MajoranaPairScanner(uint32_t n_, std::vector<PhasedPauli> maj) : n(n_) {
    majoranas = std::move(maj);
    prods = edge_products(majoranas);
    num_edges = prods.size();
    std::map<uint64_t, int> pidx;
    for (size_t e = 0; e < prods.size(); ++e) pidx[prods[e].key()] = (int)e;
    const auto &fam = stabilizer_family(n);
    inter.reserve(fam.size());
    row_pat.reserve(fam.size());
    for (const auto &stab : fam) {
      std::vector<std::pair<int, int>> iv;
      std::vector<std::pair<int, int>> rp;
      for (const auto &[p, r] : stab.span_elements()) {
        if (p.is_zero()) continue;
        rp.emplace_back((int)(p.key() - 1), r);
        auto it = pidx.find(p.key());
        if (it != pidx.end()) iv.emplace_back(it->second, r);
      }
      inter.push_back(std::move(iv));
      row_pat.push_back(std::move(rp));
    }
  }

  // All stabilizer inner products for eta: returns min s (in units of 1/n
  // relative to 1) and collects orthogonal stabilizer indices.
  bool check(uint64_t eta, std::vector<int> *orth) const {
    bool member = true;
    for (size_t s = 0; s < inter.size(); ++s) {
      int acc = 0;
      for (auto [e, r] : inter[s]) acc += ((r ^ (int)((eta >> e) & 1)) ? -1 : 1);
      if (acc < -(int)n) member = false;  // cannot happen for valid supports; honesty check
      if (acc == -(int)n && orth) orth->push_back((int)s);
    }
    return member;
  }

  size_t rank_of(const std::vector<int> &orth) const {
    size_t cols = (size_t(1) << (2 * n)) - 1;
    if (cols <= 15) {
      std::vector<int64_t> m(orth.size() * cols, 0);
      for (size_t i = 0; i < orth.size(); ++i)
        for (auto [c, r] : row_pat[orth[i]]) m[i * cols + c] = r ? -1 : 1;
      return exact_rank_i64(m.data(), (int)orth.size(), (int)cols);
    }
    std::vector<std::vector<BigInt>> m(orth.size(), std::vector<BigInt>(cols, 0));
    for (size_t i = 0; i < orth.size(); ++i)
      for (auto [c, r] : row_pat[orth[i]]) m[i][c] = r ? -1 : 1;
    return exact_rank(std::move(m));
  }

  bool is_vertex(uint64_t eta, int *orth_count = nullptr) const {
    std::vector<int> orth;
    bool member = check(eta, &orth);
    if (orth_count) *orth_count = (int)orth.size();
    if (!member) return false;
    return rank_of(orth) == (size_t(1) << (2 * n)) - 1;
  }
};

uint64_t splitmix64_step(uint64_t &s) {
  uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

SignSearchResult find_vertex_signs_serial(uint32_t n, bool exhaustive, uint64_t budget,
                                          uint64_t seed) {
  MajoranaPairScanner scan(n);
  SignSearchResult out;
  out.label.n = n;
  out.label.majoranas = scan.majoranas;
  if (exhaustive) {
    if (scan.num_edges > 20) throw std::invalid_argument("exhaustive sign search too large");
    uint64_t total = 1ull << scan.num_edges;
    for (uint64_t eta = 0; eta < total; ++eta) {
      ++out.tried;
      if (scan.is_vertex(eta)) {
        ++out.vertex_count;
        if (!out.found) {
          out.found = true;
          out.label.eta = eta;
        }
      }
    }
    return out;
  }
  uint64_t rng = seed ^ 0x6C62272E07BB0142ull;
  uint64_t mask = (scan.num_edges >= 64) ? ~0ull : ((1ull << scan.num_edges) - 1);
  for (uint64_t t = 0; t < budget; ++t) {
    uint64_t eta = splitmix64_step(rng) & mask;
    ++out.tried;
    if (scan.is_vertex(eta)) {
      out.found = true;
      out.label.eta = eta;
      out.vertex_count = 1;
      return out;
    }
  }
  return out;
}

SignSearchResult find_vertex_signs(uint32_t n, bool exhaustive, uint64_t budget, uint64_t seed,
                                   bool parallel) {
  if (!parallel || !exhaustive) return find_vertex_signs_serial(n, exhaustive, budget, seed);
  MajoranaPairScanner scan(n);
  if (scan.num_edges > 20) throw std::invalid_argument("exhaustive sign search too large");
  SignSearchResult out;
  out.label.n = n;
  out.label.majoranas = scan.majoranas;
  uint64_t total = 1ull << scan.num_edges;
  uint64_t vertex_count = 0;
  uint64_t first_eta = total;  // min eta that is a vertex
#pragma omp parallel reduction(+ : vertex_count) reduction(min : first_eta)
  {
#pragma omp for schedule(dynamic, 64)
    for (long long eta = 0; eta < (long long)total; ++eta) {
      if (scan.is_vertex((uint64_t)eta)) {
        ++vertex_count;
        if ((uint64_t)eta < first_eta) first_eta = (uint64_t)eta;
      }
    }
  }
  out.tried = total;
  out.vertex_count = vertex_count;
  if (vertex_count > 0) {
    out.found = true;
    out.label.eta = first_eta;
  }
  return out;
}

BigInt f_counting(uint32_t n, uint32_t m) {
  if (m < 1 || m > n) throw std::invalid_argument("f_counting requires 1 <= m <= n");
  BigInt num = factorial(2 * m) * factorial(2 * (n - m)) * BigInt(2 * n + 1 - 2 * m);
  BigInt den = factorial(m) * factorial(n - m) * (BigInt(1) << n);
  if (num % den != 0) throw std::logic_error("f_counting not integral");
  return num / den;
}

ContainmentCount count_isotropics_containing(const PauliPoint &a,
                                             const std::vector<PhasedPauli> &majoranas) {
  uint32_t n = a.n;
  if (majoranas.size() != 2 * n + 1) throw std::invalid_argument("majorana count mismatch");
  if (n > 3) throw std::invalid_argument("count_isotropics_containing capped at n = 3");
  if (a.is_zero()) throw std::invalid_argument("a must be a nonidentity point");
  // even factorization: solve sum_{i in S} majorana_i = a over GF(2), |S| even
  size_t k = majoranas.size();
  // gaussian on 2n-bit columns
  std::vector<uint64_t> cols(k);
  for (size_t i = 0; i < k; ++i) cols[i] = majoranas[i].pt.key();
  uint64_t target = a.key();
  std::vector<uint64_t> combo(k);  // subset mask realizing each reduced column
  for (size_t i = 0; i < k; ++i) combo[i] = 1ull << i;
  uint64_t tcombo = 0;
  std::vector<char> used(k, 0);
  for (int bit = 2 * (int)n - 1; bit >= 0; --bit) {
    size_t piv = k;
    for (size_t i = 0; i < k; ++i)
      if (!used[i] && ((cols[i] >> bit) & 1)) {
        piv = i;
        break;
      }
    if (piv == k) continue;
    used[piv] = 1;
    for (size_t i = 0; i < k; ++i)
      if (i != piv && !used[i] && ((cols[i] >> bit) & 1)) {
        cols[i] ^= cols[piv];
        combo[i] ^= combo[piv];
      }
    if ((target >> bit) & 1) {
      target ^= cols[piv];
      tcombo ^= combo[piv];
    }
  }
  if (target != 0) throw std::invalid_argument("point not in the majorana span");
  int len = std::popcount(tcombo);
  if (len % 2 == 1) tcombo ^= (1ull << k) - 1;  // switch to the even factorization
  len = std::popcount(tcombo);
  // verify
  {
    PauliPoint acc = PauliPoint::zero(n);
    for (size_t i = 0; i < k; ++i)
      if ((tcombo >> i) & 1) acc = acc ^ majoranas[i].pt;
    if (!(acc == a)) throw std::logic_error("factorization reconstruction failed");
  }
  ContainmentCount out;
  out.m = (uint32_t)(len / 2);
  auto prods = edge_products(majoranas);
  std::set<uint64_t> pset;
  for (const auto &p : prods) pset.insert(p.key());
  out.count = 0;
  for (const auto &basis : enumerate_maximal_isotropics(n)) {
    IsotropicSubspace sub(n, basis, std::vector<int>(basis.size(), 0));
    auto span = sub.span_elements();
    int inter = 0;
    bool has_a = false;
    for (const auto &[p, s] : span) {
      if (pset.count(p.key())) ++inter;
      if (p == a) has_a = true;
    }
    if (inter == (int)n && has_a) ++out.count;
  }
  return out;
}

SignedBipartiteGraph inclusion_bigraph(const std::vector<PhasedPauli> &majoranas) {
  uint32_t n = (uint32_t)((majoranas.size() - 1) / 2);
  auto prods = edge_products(majoranas);
  std::set<uint64_t> pset;
  for (const auto &p : prods) pset.insert(p.key());
  SignedBipartiteGraph g;
  g.nl = (int)((1ull << (2 * n)) - 1);
  std::vector<std::vector<int>> right_members;
  for (const auto &basis : enumerate_maximal_isotropics(n)) {
    IsotropicSubspace sub(n, basis, std::vector<int>(basis.size(), 0));
    auto span = sub.span_elements();
    int inter = 0;
    std::vector<int> members;
    for (const auto &[p, s] : span) {
      if (p.is_zero()) continue;
      members.push_back((int)(p.key() - 1));
      if (pset.count(p.key())) ++inter;
    }
    if (inter == (int)n) right_members.push_back(std::move(members));
  }
  g.nr = (int)right_members.size();
  for (int r = 0; r < g.nr; ++r)
    for (int l : right_members[r]) g.edges.push_back({l, r, 0});
  return g;
}

std::vector<std::vector<Rational>> enumerate_projected_vertices(
    const std::vector<PauliPoint> &support_star, uint32_t n, size_t max_support) {
  if (n > 2) throw std::invalid_argument("projected-vertex enumeration capped at n = 2");
  if (support_star.size() > max_support)
    throw std::invalid_argument("projected-vertex support cap exceeded");
  std::map<uint64_t, int> cidx;
  for (size_t i = 0; i < support_star.size(); ++i) {
    if (support_star[i].is_zero()) throw std::invalid_argument("support must exclude identity");
    cidx[support_star[i].key()] = (int)i;
  }
  if (cidx.size() != support_star.size()) throw std::invalid_argument("duplicate support point");
  int d = (int)support_star.size();
  std::set<std::vector<long>> patterns;
  for (const auto &stab : stabilizer_family(n)) {
    std::vector<long> v(d, 0);
    for (const auto &[p, r] : stab.span_elements()) {
      auto it = cidx.find(p.key());
      if (it != cidx.end()) v[it->second] = r ? -1 : 1;
    }
    patterns.insert(v);
  }
  // box |c_b| <= 1
  for (int i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      std::vector<long> v(d, 0);
      v[i] = s;
      patterns.insert(v);
    }
  std::vector<Halfspace> sys;
  for (const auto &pat : patterns) {
    Halfspace h;
    h.a.assign(pat.begin(), pat.end());
    h.b = 1;
    sys.push_back(std::move(h));
  }
  return dd_vertices(sys, d, 1);
}

namespace {

// All isotropic subspaces (every dimension), as sorted span keys + basis.
void isotropic_subspaces_dfs(uint32_t n, std::vector<PauliPoint> &span,
                             std::vector<PauliPoint> &basis, std::set<std::vector<uint64_t>> &seen,
                             std::vector<std::vector<PauliPoint>> &out) {
  std::vector<uint64_t> keys;
  for (const auto &p : span) keys.push_back(p.key());
  std::sort(keys.begin(), keys.end());
  if (seen.insert(keys).second) out.push_back(basis);
  for (uint64_t zz = 0; zz < (1ull << n); ++zz)
    for (uint64_t xx = 0; xx < (1ull << n); ++xx) {
      PauliPoint p(n, zz, xx);
      if (p.is_zero()) continue;
      bool member = false, commutes = true;
      for (const auto &q : span) {
        if (q == p) member = true;
        if (symplectic(p, q)) {
          commutes = false;
          break;
        }
      }
      if (member || !commutes) continue;
      size_t sz = span.size();
      for (size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ p);
      basis.push_back(p);
      isotropic_subspaces_dfs(n, span, basis, seen, out);
      basis.pop_back();
      span.resize(sz);
    }
}

}  // namespace

std::vector<std::vector<PauliPoint>> enumerate_maximal_cnc_sets(uint32_t n) {
  if (n > 2) throw std::invalid_argument("maximal CNC enumeration capped at n = 2");
  std::vector<PauliPoint> span{PauliPoint::zero(n)}, basis;
  std::set<std::vector<uint64_t>> seen;
  std::vector<std::vector<PauliPoint>> all_iso;
  isotropic_subspaces_dfs(n, span, basis, seen, all_iso);

  std::set<std::vector<uint64_t>> result_keys;
  std::vector<std::vector<PauliPoint>> result;
  for (const auto &ibasis : all_iso) {
    uint32_t k = (uint32_t)ibasis.size();
    if (k >= n) continue;  // the k = n family is the (non-maximal) isotropic itself
    uint32_t want = 2 * (n - k) + 1;
    IsotropicSubspace sub(n, ibasis, std::vector<int>(ibasis.size(), 0));
    auto span_elems = sub.span_elements();
    // candidate coset reps: commute with I, nonzero mod I, deduped by rep
    std::set<uint64_t> rep_seen;
    std::vector<PauliPoint> cands;
    for (uint64_t zz = 0; zz < (1ull << n); ++zz)
      for (uint64_t xx = 0; xx < (1ull << n); ++xx) {
        PauliPoint p(n, zz, xx);
        if (p.is_zero() || !sub.commutes_with(p) || sub.in_span(p)) continue;
        auto [rep, sgn] = sub.reduce(p);
        if (rep_seen.insert(rep.key()).second) cands.push_back(rep);
      }
    std::sort(cands.begin(), cands.end());
    // DFS for families of exactly `want` pairwise-anticommuting reps
    std::vector<PauliPoint> family;
    std::function<void(size_t)> rec = [&](size_t start) {
      if (family.size() == want) {
        std::vector<uint64_t> keys;
        for (const auto &[p, s] : span_elems) keys.push_back(p.key());
        for (const auto &f : family)
          for (const auto &[p, s] : span_elems) keys.push_back((f ^ p).key());
        std::sort(keys.begin(), keys.end());
        if (result_keys.insert(keys).second) {
          std::vector<PauliPoint> omega;
          for (uint64_t key : keys)
            omega.emplace_back(n, key >> n, key & ((1ull << n) - 1));
          result.push_back(std::move(omega));
        }
        return;
      }
      for (size_t i = start; i < cands.size(); ++i) {
        bool ok = true;
        for (const auto &f : family)
          if (symplectic(cands[i], f) != 1) {
            ok = false;
            break;
          }
        if (!ok) continue;
        family.push_back(cands[i]);
        rec(i + 1);
        family.pop_back();
      }
    };
    rec(0);
  }
  return result;
}

PhasePointOperator stabilizer_operator(const IsotropicSubspace &i) {
  PhasePointOperator op;
  op.n = i.num_qubits();
  for (const auto &[p, s] : i.span_elements()) op.terms.emplace_back(p, Rational(s ? -1 : 1));
  op.normalize();
  return op;
}

PhasePointOperator clifford_conjugate(const PhasePointOperator &a, const CliffordTableau &g) {
  PhasePointOperator out;
  out.n = a.n;
  for (const auto &[p, c] : a.terms) {
    PhasedPauli img = g.apply(PhasedPauli(0, p));
    if (!img.hermitian()) throw std::logic_error("clifford image not hermitian");
    out.terms.emplace_back(img.pt, img.sign_bit() ? -c : c);
  }
  out.normalize();
  return out;
}

PhasePointOperator tensor_with_tail(const PhasePointOperator &a, const IsotropicSubspace &tail) {
  uint32_t n1 = a.n, n2 = tail.num_qubits();
  uint32_t n = n1 + n2;
  PhasePointOperator out;
  out.n = n;
  auto embed = [&](const PauliPoint &p, const PauliPoint &t) {
    return PauliPoint(n, p.z | (t.z << n1), p.x | (t.x << n1));
  };
  for (const auto &[p, c] : a.terms)
    for (const auto &[t, s] : tail.span_elements())
      out.terms.emplace_back(embed(p, t), s ? -c : c);
  out.normalize();
  // constructive record: core on the first block, tail rows embedded
  PhasePointOperator::Constructive cf{.core = {}, .tail = {}, .g = CliffordTableau::identity(n)};
  for (const auto &[p, c] : a.terms) cf.core.emplace_back(embed(p, PauliPoint::zero(n2)), c);
  for (const auto &[t, s] : tail.rows()) cf.tail.emplace_back(embed(PauliPoint::zero(n1), t), s);
  out.constructive = cf;
  return out;
}

std::vector<PhasePointOperator> build_phase_space(uint32_t n, const PhaseSpaceConfig &config) {
  std::vector<PhasePointOperator> out;
  std::set<std::string> seen;
  auto push = [&](PhasePointOperator op) {
    if (seen.insert(op.dedup_key()).second) out.push_back(std::move(op));
  };
  if (config.stabilizers)
    for (const auto &stab : stabilizer_family(n)) push(stabilizer_operator(stab));
  if (config.cnc_maximal) {
    for (const auto &omega : enumerate_maximal_cnc_sets(n)) {
      auto sys = gamma_system(omega);
      auto sol = sys.solve();
      if (!sol.ok) throw std::logic_error("maximal CNC set without value assignment");
      size_t f = sol.null_basis.size();
      if (f > 20) throw std::logic_error("too many gamma solutions");
      for (uint64_t bits = 0; bits < (1ull << f); ++bits) {
        CncLabel label;
        label.n = n;
        label.omega = omega;
        label.gamma = sol.particular;
        for (size_t j = 0; j < f; ++j)
          if ((bits >> j) & 1)
            for (size_t v = 0; v < omega.size(); ++v) label.gamma[v] ^= sol.null_basis[j][v];
        push(make_cnc_operator(label));
      }
    }
  }
  if (config.majorana_pairs) {
    if (n < 1 || n > 2) throw std::invalid_argument("pair-product family enumeration needs n in {1,2}");
    // every maximal pairwise-anticommuting family of 2n+1 points
    std::vector<std::vector<PauliPoint>> supports;
    for (const auto &omega : enumerate_maximal_cnc_sets(n))
      if (omega.size() == 2 * n + 2) {  // {0} plus 2n+1 anticommuting points
        std::vector<PauliPoint> fam;
        for (const auto &p : omega)
          if (!p.is_zero()) fam.push_back(p);
        supports.push_back(std::move(fam));
      }
    for (const auto &fam : supports) {
      std::vector<PhasedPauli> maj;
      for (const auto &p : fam) maj.emplace_back(0, p);
      MajoranaPairScanner scan(n, maj);
      for (uint64_t eta = 0; eta < (1ull << scan.num_edges); ++eta) {
        if (config.majorana_pairs_vertices_only && !scan.is_vertex(eta)) continue;
        push(make_majorana_pair_operator(MajoranaPairLabel{.n = n, .majoranas = maj, .eta = eta}));
      }
    }
  }
  for (const auto &support : config.projected_supports) {
    for (const auto &coeffs : enumerate_projected_vertices(support, n)) {
      PhasePointOperator op;
      op.n = n;
      op.terms.emplace_back(PauliPoint::zero(n), Rational(1));
      for (size_t j = 0; j < support.size(); ++j)
        if (coeffs[j] != 0) op.terms.emplace_back(support[j], coeffs[j]);
      op.normalize();
      push(std::move(op));
    }
  }
  return out;
}

}  // namespace qpsim
