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

#ifndef EQUIMATCH_MATCHING_H_
#define EQUIMATCH_MATCHING_H_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "equimatch/graph.hpp"

namespace equimatch {

/// A set of pairwise vertex-disjoint edges of a host graph, kept as a sorted
/// edge list. The exposed set is derived against the host on demand.
struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  bool empty() const { return edges.empty(); }

  /// Saturated vertices, ascending.
  std::vector<int> covered_vertices() const;

  /// Vertices of `g` left exposed, ascending.
  std::vector<int> exposed_vertices(const Graph& g) const;

  bool covers(int v) const;
  std::optional<int> mate(int v) const;

  bool operator==(const Matching& other) const { return edges == other.edges; }
};

Matching make_matching(std::vector<Edge> edges);

/// True iff the edges are pairwise disjoint and all present in g.
bool is_valid_matching(const Graph& g, const Matching& m);

/// A matching is maximal iff its exposed set is independent. Throws
/// std::invalid_argument if m is not a matching of g.
bool is_maximal_matching(const Graph& g, const Matching& m);

bool is_perfect_matching(const Graph& g, const Matching& m);

// ---------------------------------------------------------------------------
// Maximum matching. Augmenting-path search with blossom contraction, cubic in
// the vertex count. Output is deterministic: greedy seeding and search both
// scan vertices and neighbors in ascending order.
// ---------------------------------------------------------------------------

Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);  // nu
bool has_perfect_matching(const Graph& g);

// ---------------------------------------------------------------------------
// Exhaustive enumeration of maximal matchings. Intended for small graphs
// (roughly n <= 20); the caller is responsible for scale. Matchings are
// produced exactly once each, in lexicographic order of their sorted edge
// lists. With `size_cap`, only matchings with at most that many edges are
// visited.
// ---------------------------------------------------------------------------

/// Visits every maximal matching; return false from the visitor to stop.
void for_each_maximal_matching(const Graph& g,
                               const std::function<bool(const Matching&)>& visit,
                               std::optional<int> size_cap = std::nullopt);

std::vector<Matching> enumerate_maximal_matchings(
    const Graph& g, std::optional<int> size_cap = std::nullopt);

/// Exhaustive minimum maximal matching. Returns the lexicographically first
/// minimum together with beta. Desk scale.
std::pair<Matching, int> minimum_maximal_matching(const Graph& g);

// ---------------------------------------------------------------------------
// Matching-covered sets. Decided by reduction to perfect matching: every
// vertex outside S gains a private pendant vertex, the pendants form a
// clique, and one extra clique vertex fixes parity. The input graph then has
// a matching covering S iff the augmented graph has a perfect matching.
// ---------------------------------------------------------------------------

/// Returns a matching of g covering s, or nullopt if none exists. Throws on
/// out-of-range vertices.
std::optional<Matching> find_covering_matching(const Graph& g,
                                               const std::vector<int>& s);

bool has_matching_covering(const Graph& g, const std::vector<int>& s);

// ---------------------------------------------------------------------------
// Size control for maximal matchings.
// ---------------------------------------------------------------------------

/// Grows a maximal matching one augmenting path at a time until it has
/// exactly k edges. The result is maximal, covers V(m), and has size k.
/// Requires m maximal and |m| <= k <= nu(g); throws otherwise.
Matching extend_maximal_preserving_coverage(const Graph& g, const Matching& m,
                                            int k);

/// A maximal matching with exactly k edges, or nullopt when k is outside
/// [beta(g), nu(g)]. Uses the exhaustive minimum as a base, so desk scale.
std::optional<Matching> maximal_matching_of_size(const Graph& g, int k);

/// Extends `base` to a maximal matching by scanning edges in ascending order.
Matching greedy_maximal_extension(const Graph& g, const Matching& base);

// ---------------------------------------------------------------------------
// Summary numbers.
// ---------------------------------------------------------------------------

struct MatchingMetrics {
  int nu = 0;
  std::optional<int> beta;  // absent when n exceeded the cap
  std::optional<int> mu;    // nu - beta when beta is known
  int deficiency = 0;       // n - 2 nu, twice the sigma value

  double sigma() const { return deficiency / 2.0; }
};

/// nu always; beta and mu only when vertex_count() <= beta_cap.
MatchingMetrics compute_matching_metrics(const Graph& g, int beta_cap = 20);

}  // namespace equimatch

#endif  // EQUIMATCH_MATCHING_H_
