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

#ifndef EQUIMATCH_GALLAI_EDMONDS_H_
#define EQUIMATCH_GALLAI_EDMONDS_H_

#include <vector>

#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"

namespace equimatch {

/// The canonical structure theory partition of a graph:
///   D = vertices missed by at least one maximum matching,
///   A = vertices outside D with a neighbor in D,
///   C = everything else.
/// Components of the subgraph on D are factor-critical and the subgraph on C
/// has a perfect matching. `attachment_graph` is the bipartite graph obtained
/// by dropping C, dropping edges inside A, and contracting each D-component
/// to a single vertex; its vertices are the A-vertices (in ascending order)
/// followed by one vertex per D-component (ordered by smallest member).
struct GallaiEdmondsDecomposition {
  std::vector<int> d;
  std::vector<int> a;
  std::vector<int> c;
  std::vector<std::vector<int>> d_components;
  Graph attachment_graph;          // bipartite A vs contracted D-components
  std::vector<int> component_of;   // per original vertex: D-component index or -1
  int rho = 1;                     // max A-degree in attachment_graph, 1 if A empty

  int component_node(int component_index) const {
    return static_cast<int>(a.size()) + component_index;
  }
};

/// Computes the decomposition. D is found by the deletion criterion: v lies
/// in D iff removing v does not change the matching number. Deterministic and
/// polynomial (n + 1 maximum matching runs).
GallaiEdmondsDecomposition gallai_edmonds(const Graph& g);

/// True iff deleting any single vertex leaves a perfect matching.
bool is_factor_critical(const Graph& g);

/// Maximum number of D-components one A-vertex attaches to; 1 when A is
/// empty.
int rho(const Graph& g);

}  // namespace equimatch

#endif  // EQUIMATCH_GALLAI_EDMONDS_H_
