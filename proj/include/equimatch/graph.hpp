// Copyright 2026 The Equimatch Authors
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

#ifndef EQUIMATCH_GRAPH_H_
#define EQUIMATCH_GRAPH_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equimatch {

// An undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

// Normalizes an unordered pair into canonical edge form.
inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// No self-loops, no parallel edges. Isolated vertices are allowed. All
/// derived structures (matchings, decompositions, certificates) reference a
/// Graph and never mutate it, so values can be shared freely across threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from a vertex count and an edge list. Edges may be given
  /// in either orientation; they are normalized and sorted. Throws
  /// std::invalid_argument on self-loops, duplicates, or out-of-range ids.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of v in ascending order.
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const { return 0 <= v && v < n_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// Constructions. Each returns a fresh graph; inputs are never modified.
// Vertex labeling is documented per construction so that certificates and
// fixtures are reproducible.
// ---------------------------------------------------------------------------

/// Disjoint union. Vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Join: disjoint union plus all cross edges between the two parts.
Graph join(const Graph& a, const Graph& b);

/// Cartesian product. Vertex (u, v) maps to id u * b.vertex_count() + v
/// (row-major). (u,v) ~ (u',v') iff (u == u' and v ~ v') or (v == v' and
/// u ~ u').
Graph cartesian_product(const Graph& a, const Graph& b);

/// Complement over the same vertex set.
Graph complement(const Graph& g);

/// Replaces every edge uv by a path u - x_uv - y_uv - v with two fresh
/// vertices. Subdivision vertices are appended after the originals in edge
/// order, so the result has n + 2m vertices and 3m edges.
Graph double_subdivide(const Graph& g);

/// Induced subgraph together with the map from new ids back to the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // to_parent[new_id] = original id
};

/// Induces on `vertices` (deduplicated, sorted). Throws on out-of-range ids.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

/// Induces on the complement of `removed`.
InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& removed);

/// Connected components of the subgraph induced on `vertices`, each sorted
/// ascending, ordered by smallest member.
std::vector<std::vector<int>> components_within(const Graph& g,
                                                const std::vector<int>& vertices);

// ---------------------------------------------------------------------------
// Standard families.
// ---------------------------------------------------------------------------

Graph path_graph(int n);                           // P_n, n >= 0
Graph cycle_graph(int n);                          // C_n, n >= 3
Graph complete_graph(int n);                       // K_n, n >= 0
Graph complete_bipartite_graph(int a, int b);      // K_{a,b}; part A first
Graph star_graph(int leaves);                      // K_{1,leaves}; center is 0
Graph disjoint_edges_graph(int k);                 // kK_2; edges (2i, 2i+1)

/// Dispatch by family name: "path", "cycle", "complete",
/// "complete-bipartite", "star", "kk2". Throws std::invalid_argument on an
/// unknown name or invalid parameters (e.g. cycle length below 3).
Graph build_family(const std::string& kind, const std::vector<int>& params);

// ---------------------------------------------------------------------------
// Classical invariants, by exact search. Desk scale: supported for
// vertex_count() <= 64, otherwise throws std::invalid_argument.
// ---------------------------------------------------------------------------

int independence_number(const Graph& g);  // alpha
int vertex_cover_number(const Graph& g);  // tau = n - alpha
int clique_number(const Graph& g);        // omega, by direct clique search

/// Witness variants; deterministic (first optimum met by the search).
std::vector<int> maximum_independent_set(const Graph& g);
std::vector<int> maximum_clique(const Graph& g);

struct GraphInvariants {
  int alpha = 0;
  int tau = 0;
  int omega = 0;
};

GraphInvariants compute_invariants(const Graph& g);

// ---------------------------------------------------------------------------
// Edge-list text I/O.
//
// Format: the first significant line holds the vertex count n; every further
// significant line is "u v" with 0 <= u < v < n. '#' starts a comment that
// runs to the end of the line. Re-declaring an edge, in either orientation,
// is an error.
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

Graph read_graph(std::string_view text);

/// Canonical form: vertex count line followed by sorted "u v" lines.
/// read_graph(write_graph(g)) == g.
std::string write_graph(const Graph& g);

}  // namespace equimatch

#endif  // EQUIMATCH_GRAPH_H_
