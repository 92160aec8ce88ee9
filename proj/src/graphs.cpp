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

#include "qpsim/graphs.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "qpsim/linalg.hpp"

namespace qpsim {

int Graph::num_edges() const {
  int e = 0;
  for (int i = 0; i < v_; ++i)
    for (int j = i + 1; j < v_; ++j) e += adj_[i][j];
  return e;
}

void Graph::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("self loop");
  if (a < 0 || b < 0 || a >= v_ || b >= v_) throw std::out_of_range("edge endpoint");
  adj_[a][b] = adj_[b][a] = 1;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int j = 0; j < v_; ++j) d += adj_[v][j];
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < v_; ++i)
    for (int j = i + 1; j < v_; ++j)
      if (adj_[i][j]) out.emplace_back(i, j);
  return out;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<int> comp(v_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < v_; ++s) {
    if (comp[s] >= 0) continue;
    int id = (int)out.size();
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int w = 0; w < v_; ++w)
        if (adj_[u][w] && comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<int> &verts) const {
  Graph g((int)verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (adj_[verts[i]][verts[j]]) g.add_edge((int)i, (int)j);
  return g;
}

bool Graph::is_isomorphic_small(const Graph &other) const {
  if (v_ != other.v_ || num_edges() != other.num_edges()) return false;
  if (v_ > 8) throw std::invalid_argument("is_isomorphic_small: too many vertices");
  std::vector<int> perm(v_);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < v_ && ok; ++i)
      for (int j = i + 1; j < v_ && ok; ++j)
        if (adj_[i][j] != other.adj_[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph Graph::complete(int m) {
  Graph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::line_graph(const Graph &r) {
  auto es = r.edges();
  Graph g((int)es.size());
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) g.add_edge((int)i, (int)j);
    }
  return g;
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  for (auto [a, b] : edges()) os << a << " " << b << "\n";
  return os.str();
}

Graph Graph::from_edge_list(const std::string &text) {
  std::istringstream is(text);
  std::vector<std::pair<int, int>> es;
  int mx = -1;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a >> b)) throw std::invalid_argument("bad edge list line: " + line);
    es.emplace_back(a, b);
    mx = std::max({mx, a, b});
  }
  Graph g(mx + 1);
  for (auto [a, b] : es) g.add_edge(a, b);
  return g;
}

Graph frustration_graph(const std::vector<PauliPoint> &points) {
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_zero()) throw std::invalid_argument("zero point in frustration graph");
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw std::invalid_argument("duplicate point in frustration graph");
  }
  Graph g((int)points.size());
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (symplectic(points[i], points[j])) g.add_edge((int)i, (int)j);
  return g;
}

namespace {

// Krausz-partition backtracking state.
struct KrauszSearch {
  const Graph &g;
  int v;
  std::vector<std::pair<int, int>> es;
  std::vector<int> edge_id;                 // v*v matrix -> edge index or -1
  std::vector<int> covered;                 // per edge: 0/1
  std::vector<std::vector<int>> cells;      // cliques (vertex lists)
  std::vector<std::vector<int>> vcells;     // per vertex: cell ids
  int uncovered_count = 0;
  bool done = false;

  explicit KrauszSearch(const Graph &graph) : g(graph), v(graph.num_vertices()) {
    es = g.edges();
    edge_id.assign(v * v, -1);
    for (size_t i = 0; i < es.size(); ++i) {
      edge_id[es[i].first * v + es[i].second] = (int)i;
      edge_id[es[i].second * v + es[i].first] = (int)i;
    }
    covered.assign(es.size(), 0);
    vcells.assign(v, {});
    uncovered_count = (int)es.size();
  }

  bool vertex_full(int u) const { return vcells[u].size() >= 2; }

  // Can cell c absorb vertex w? All members adjacent to w, all edges (w, member) uncovered.
  bool can_extend(int c, int w) const {
    if (vertex_full(w)) return false;
    for (int m : cells[c]) {
      if (!g.has_edge(m, w)) return false;
      if (covered[edge_id[m * v + w]]) return false;
    }
    return true;
  }

  void do_extend(int c, int w, std::vector<int> &newly) {
    for (int m : cells[c]) {
      int id = edge_id[m * v + w];
      covered[id] = 1;
      newly.push_back(id);
      --uncovered_count;
    }
    cells[c].push_back(w);
    vcells[w].push_back(c);
  }

  void undo_extend(int c, int w, const std::vector<int> &newly) {
    cells[c].pop_back();
    vcells[w].pop_back();
    for (int id : newly) {
      covered[id] = 0;
      ++uncovered_count;
    }
  }

  // Options for covering edge e = (a, b): (cell, vertex to add) pairs, or a new cell (-1).
  int count_options(int e, std::vector<std::pair<int, int>> *out) const {
    auto [a, b] = es[e];
    int cnt = 0;
    for (int c : vcells[a])
      if (can_extend(c, b)) {
        ++cnt;
        if (out) out->emplace_back(c, b);
      }
    for (int c : vcells[b])
      if (can_extend(c, a)) {
        ++cnt;
        if (out) out->emplace_back(c, a);
      }
    if (!vertex_full(a) && !vertex_full(b)) {
      ++cnt;
      if (out) out->emplace_back(-1, -1);
    }
    return cnt;
  }

  bool search() {
    if (uncovered_count == 0) return true;
    // fail-first: pick uncovered edge with fewest options
    int best_e = -1, best_cnt = 1 << 30;
    for (size_t e = 0; e < es.size(); ++e) {
      if (covered[e]) continue;
      int cnt = count_options((int)e, nullptr);
      if (cnt == 0) return false;
      if (cnt < best_cnt) {
        best_cnt = cnt;
        best_e = (int)e;
        if (cnt == 1) break;
      }
    }
    std::vector<std::pair<int, int>> opts;
    count_options(best_e, &opts);
    auto [a, b] = es[best_e];
    for (auto [c, w] : opts) {
      if (c >= 0) {
        std::vector<int> newly;
        do_extend(c, w, newly);
        if (search()) return true;
        undo_extend(c, w, newly);
      } else {
        int id = (int)cells.size();
        cells.push_back({a, b});
        vcells[a].push_back(id);
        vcells[b].push_back(id);
        covered[best_e] = 1;
        --uncovered_count;
        if (search()) return true;
        ++uncovered_count;
        covered[best_e] = 0;
        vcells[a].pop_back();
        vcells[b].pop_back();
        cells.pop_back();
      }
    }
    return false;
  }
};

// Quick necessary condition: line graphs are claw-free.
bool has_claw(const Graph &g) {
  int v = g.num_vertices();
  for (int c = 0; c < v; ++c) {
    std::vector<int> nb;
    for (int w = 0; w < v; ++w)
      if (g.has_edge(c, w)) nb.push_back(w);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (size_t k = j + 1; k < nb.size(); ++k)
          if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return true;
      }
  }
  return false;
}

}  // namespace

LineGraphRoot line_graph_root(const Graph &g) {
  LineGraphRoot out;
  int v = g.num_vertices();
  if (v == 0) {
    out.is_line_graph = true;
    out.root = Graph(0);
    return out;
  }
  if (v == 1) {
    out.is_line_graph = true;
    out.root = Graph(2);
    out.root.add_edge(0, 1);
    out.witness = {{0, 1}};
    return out;
  }
  if (g.connected_components().size() != 1)
    throw std::invalid_argument("line_graph_root expects a connected graph");
  if (has_claw(g)) return out;

  KrauszSearch ks(g);
  if (!ks.search()) return out;

  // Build root: one vertex per cell, plus a pendant per vertex lying in < 2 cells.
  int root_v = (int)ks.cells.size();
  std::vector<std::pair<int, int>> witness(v);
  std::vector<std::array<int, 2>> ends(v);
  for (int u = 0; u < v; ++u) {
    std::vector<int> cs = ks.vcells[u];
    while (cs.size() < 2) cs.push_back(root_v++);  // pendant root vertex
    ends[u] = {cs[0], cs[1]};
  }
  Graph root(root_v);
  for (int u = 0; u < v; ++u) {
    root.add_edge(ends[u][0], ends[u][1]);
    witness[u] = {ends[u][0], ends[u][1]};
  }
  out.is_line_graph = true;
  out.root = root;
  out.witness = witness;
  return out;
}

bool is_line_graph(const Graph &g) {
  for (const auto &comp : g.connected_components()) {
    if (comp.size() == 1) continue;
    if (!line_graph_root(g.induced(comp)).is_line_graph) return false;
  }
  return true;
}

std::vector<std::vector<int>> twin_classes(const Graph &g) {
  int v = g.num_vertices();
  auto twins = [&](int a, int b) {
    for (int w = 0; w < v; ++w) {
      if (w == a || w == b) continue;
      if (g.has_edge(a, w) != g.has_edge(b, w)) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int u = 0; u < v; ++u) {
    bool placed = false;
    for (auto &cls : classes)
      if (twins(cls[0], u)) {
        cls.push_back(u);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({u});
  }
  return classes;
}

Graph twin_quotient(const Graph &g, const std::vector<std::vector<int>> &classes) {
  Graph q((int)classes.size());
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      if (g.has_edge(classes[i][0], classes[j][0])) q.add_edge((int)i, (int)j);
  return q;
}

bool is_line_graph_up_to_twins(const Graph &g) {
  return is_line_graph(twin_quotient(g, twin_classes(g)));
}

std::string SignedBipartiteGraph::to_edge_list() const {
  std::ostringstream os;
  for (const auto &e : edges) os << e.l << " " << e.r << " " << (e.sign ? '-' : '+') << "\n";
  return os.str();
}

SignedBipartiteGraph SignedBipartiteGraph::from_edge_list(const std::string &text, int nl, int nr) {
  SignedBipartiteGraph g;
  g.nl = nl;
  g.nr = nr;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int a, b;
    std::string sg = "+";
    if (!(ls >> a >> b)) throw std::invalid_argument("bad signed edge line: " + line);
    ls >> sg;
    if (a < 0 || a >= nl || b < 0 || b >= nr) throw std::out_of_range("edge endpoint");
    g.edges.push_back({a, b, sg == "-" ? 1 : 0});
  }
  return g;
}

MatchingResult max_bipartite_matching(const SignedBipartiteGraph &g) {
  // Hopcroft-Karp.
  const int INF = 1 << 30;
  std::vector<std::vector<int>> adj(g.nl);
  for (const auto &e : g.edges) adj[e.l].push_back(e.r);
  std::vector<int> ml(g.nl, -1), mr(g.nr, -1), dist(g.nl);

  auto bfs = [&]() {
    std::queue<int> q;
    for (int u = 0; u < g.nl; ++u) {
      if (ml[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else
        dist[u] = INF;
    }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int r : adj[u]) {
        int w = mr[r];
        if (w < 0)
          found = true;
        else if (dist[w] == INF) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int u) {
    for (int r : adj[u]) {
      int w = mr[r];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        ml[u] = r;
        mr[r] = u;
        return true;
      }
    }
    dist[u] = INF;
    return false;
  };
  int size = 0;
  while (bfs())
    for (int u = 0; u < g.nl; ++u)
      if (ml[u] < 0 && dfs(u)) ++size;

  // Koenig cover: Z = unmatched left vertices and everything alternating-reachable.
  std::vector<char> zl(g.nl, 0), zr(g.nr, 0);
  std::queue<int> q;
  for (int u = 0; u < g.nl; ++u)
    if (ml[u] < 0) {
      zl[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int r : adj[u]) {
      if (ml[u] == r) continue;  // only non-matching edges left->right
      if (!zr[r]) {
        zr[r] = 1;
        if (mr[r] >= 0 && !zl[mr[r]]) {
          zl[mr[r]] = 1;
          q.push(mr[r]);
        }
      }
    }
  }
  MatchingResult res;
  res.size = size;
  res.match_l = ml;
  res.match_r = mr;
  for (int u = 0; u < g.nl; ++u)
    if (!zl[u]) res.cover_left.push_back(u);
  for (int r = 0; r < g.nr; ++r)
    if (zr[r]) res.cover_right.push_back(r);
  return res;
}

namespace {
size_t signed_matrix_rank(const SignedBipartiteGraph &g, uint64_t signbits) {
  std::vector<std::vector<BigInt>> m(g.nl, std::vector<BigInt>(g.nr, 0));
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto &e = g.edges[i];
    int s = (int)((signbits >> i) & 1) ^ e.sign;
    m[e.l][e.r] = s ? -1 : 1;
  }
  return exact_rank(std::move(m));
}

uint64_t splitmix64(uint64_t &s) {
  uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

SignedRankResult signed_rank_search(const SignedBipartiteGraph &g, int target, uint64_t seed,
                                    int random_tries) {
  SignedRankResult out;
  if (target < 0 || target > g.nl || g.nl > g.nr)
    throw std::invalid_argument("signed_rank_search: bad target/shape");
  // A matching of order `target` is necessary (rank <= term rank); Corollary 2
  // makes it sufficient, which the search below realizes constructively.
  auto matching = max_bipartite_matching(g);
  if (matching.size < target) return out;

  auto finish = [&](uint64_t bits, size_t rank) {
    out.success = true;
    out.rank = (int)rank;
    out.signs.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i)
      out.signs[i] = (int)((bits >> i) & 1) ^ g.edges[i].sign;
  };

  uint64_t rng = seed ^ 0xD1B54A32D192ED03ull;
  for (int t = 0; t < random_tries; ++t) {
    uint64_t bits = t == 0 ? 0 : splitmix64(rng);  // try the given signs first
    size_t rank = signed_matrix_rank(g, bits);
    if ((int)rank >= target) {
      finish(bits, rank);
      return out;
    }
  }
  if (g.edges.size() < 20) {
    for (uint64_t bits = 0; bits < (1ull << g.edges.size()); ++bits) {
      size_t rank = signed_matrix_rank(g, bits);
      if ((int)rank >= target) {
        finish(bits, rank);
        return out;
      }
    }
  }
  return out;
}

int independence_number(const Graph &g, int cap) {
  int v = g.num_vertices();
  if (v > cap) throw std::invalid_argument("independence_number: vertex cap exceeded");
  if (v == 0) return 0;
  if (v > 64) throw std::invalid_argument("independence_number: > 64 vertices unsupported");
  std::vector<uint64_t> nb(v, 0);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (g.has_edge(i, j)) nb[i] |= 1ull << j;
  uint64_t full = (v == 64) ? ~0ull : ((1ull << v) - 1);
  int best = 0;
  std::function<void(uint64_t, int)> rec = [&](uint64_t cand, int cur) {
    if (cur + std::popcount(cand) <= best) return;
    if (!cand) {
      best = std::max(best, cur);
      return;
    }
    // branch on a max-degree candidate vertex
    int pick = -1, deg = -1;
    uint64_t m = cand;
    while (m) {
      int u = std::countr_zero(m);
      m &= m - 1;
      int d = std::popcount(nb[u] & cand);
      if (d > deg) {
        deg = d;
        pick = u;
      }
    }
    rec(cand & ~nb[pick] & ~(1ull << pick), cur + 1);
    rec(cand & ~(1ull << pick), cur);
  };
  rec(full, 0);
  return best;
}

}  // namespace qpsim
