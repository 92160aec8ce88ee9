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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpsim/pauli.hpp"

namespace qpsim {

/// Simple undirected graph, no self-loops, dense adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int v) : v_(v), adj_(v, std::vector<uint8_t>(v, 0)) {}

  int num_vertices() const { return v_; }
  int num_edges() const;
  bool has_edge(int a, int b) const { return adj_[a][b] != 0; }
  void add_edge(int a, int b);
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::vector<int>> connected_components() const;
  Graph induced(const std::vector<int> &verts) const;
  bool is_isomorphic_small(const Graph &other) const;  // exhaustive, <= 8 vertices

  static Graph complete(int m);
  static Graph line_graph(const Graph &r);

  /// Edge-list text: one "u v" pair per line.
  std::string to_edge_list() const;
  static Graph from_edge_list(const std::string &text);

 private:
  int v_ = 0;
  std::vector<std::vector<uint8_t>> adj_;
};

/// Frustration graph of a set of Pauli points: edge iff anticommuting.
/// Throws on duplicates or the zero point.
Graph frustration_graph(const std::vector<PauliPoint> &points);

/// Result of line-graph recognition: a root graph R with L(R) isomorphic to
/// the input and the witness map (input vertex -> edge of R), or a negative
/// verdict.
struct LineGraphRoot {
  bool is_line_graph = false;
  Graph root;
  std::vector<std::pair<int, int>> witness;  // input vertex -> root edge endpoints
};

/// Krausz-partition search; input must be connected (callers decompose).
/// A single vertex recognizes as L(K_2).
LineGraphRoot line_graph_root(const Graph &g);

/// Recognition across components.
bool is_line_graph(const Graph &g);

/// Coarsest partition into twin classes: u, v are twins when their
/// neighbourhoods coincide outside {u, v} (adjacent or not).
std::vector<std::vector<int>> twin_classes(const Graph &g);

/// Quotient by twin classes (one representative per class).
Graph twin_quotient(const Graph &g, const std::vector<std::vector<int>> &classes);

/// Line graph after collapsing twin classes?
bool is_line_graph_up_to_twins(const Graph &g);

/// Bipartite graph with signed edges across the bipartition.
struct SignedBipartiteGraph {
  int nl = 0, nr = 0;
  struct Edge {
    int l, r;
    int sign;  // 0 -> +1, 1 -> -1
  };
  std::vector<Edge> edges;

  std::string to_edge_list() const;  // "u v +"/"u v -" lines
  static SignedBipartiteGraph from_edge_list(const std::string &text, int nl, int nr);
};

/// Maximum-cardinality matching (Hopcroft-Karp) with a Koenig vertex cover
/// certificate of equal size.
struct MatchingResult {
  int size = 0;
  std::vector<int> match_l;  // per left vertex: matched right vertex or -1
  std::vector<int> match_r;
  std::vector<int> cover_left;   // vertex cover, left side indices
  std::vector<int> cover_right;  // vertex cover, right side indices
};
MatchingResult max_bipartite_matching(const SignedBipartiteGraph &g);

/// Searches for edge signs making the biadjacency matrix have rank >= m over
/// the rationals. Succeeds iff a matching of order m exists: Fail is decided
/// by the matching bound, success by randomized signs with an exhaustive
/// fallback below 20 edges.
struct SignedRankResult {
  bool success = false;
  std::vector<int> signs;  // per edge, 0 -> +1, 1 -> -1
  int rank = 0;
};
SignedRankResult signed_rank_search(const SignedBipartiteGraph &g, int target,
                                    uint64_t seed = 1, int random_tries = 128);

/// Exact maximum independent set size via branch and bound; vertex count cap.
int independence_number(const Graph &g, int cap = 40);

}  // namespace qpsim
