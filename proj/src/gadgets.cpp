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

#include "equimatch/gadgets.hpp"

namespace equimatch {

Graph make_gap_amplifier(const Graph& g) {
  if (g.vertex_count() < 1) {
    throw std::invalid_argument("amplifier needs a non-empty input graph");
  }
  return join(disjoint_union(g, g), complete_graph(2 * g.vertex_count()));
}

Graph make_prism(int k) {
  if (k < 2) throw std::invalid_argument("prism parameter must be at least 2");
  return cartesian_product(cycle_graph(2 * k + 1), complete_graph(2));
}

Graph make_subdivision_complement(const Graph& g) {
  if (g.vertex_count() < 4) {
    throw std::invalid_argument("input must have at least 4 vertices");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw std::invalid_argument("input must be cubic; vertex " +
                                  std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)));
    }
  }
  return complement(double_subdivide(g));
}

Graph make_kp4(int k) {
  if (k < 1) throw std::invalid_argument("need at least one path");
  Graph result = path_graph(4);
  for (int i = 1; i < k; ++i) result = disjoint_union(result, path_graph(4));
  return result;
}

Graph make_kp4_connected(int k) {
  Graph base = make_kp4(k);
  std::vector<Edge> edges = base.edges();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(4 * i + 1, 4 * j + 1);
  return Graph(base.vertex_count(), std::move(edges));
}

Graph gap_two_fixture() {
  return Graph(10, {{0, 1},
                    {1, 2},
                    {2, 3},
                    {2, 4},
                    {3, 4},
                    {4, 5},
                    {5, 6},
                    {6, 7},
                    {3, 8},
                    {8, 9}});
}

}  // namespace equimatch
