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

#include "equimatch/gallai_edmonds.hpp"

#include <algorithm>
#include <cassert>

namespace equimatch {

GallaiEdmondsDecomposition gallai_edmonds(const Graph& g) {
  const int n = g.vertex_count();
  const int nu = matching_number(g);

  GallaiEdmondsDecomposition out;
  std::vector<char> in_d(n, 0);
  for (int v = 0; v < n; ++v) {
    // v is avoidable by some maximum matching iff deletion keeps nu.
    if (matching_number(delete_vertices(g, {v}).graph) == nu) {
      in_d[v] = 1;
      out.d.push_back(v);
    }
  }
  std::vector<char> in_a(n, 0);
  for (int v = 0; v < n; ++v) {
    if (in_d[v]) continue;
    for (int to : g.neighbors(v)) {
      if (in_d[to]) {
        in_a[v] = 1;
        out.a.push_back(v);
        break;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!in_d[v] && !in_a[v]) out.c.push_back(v);

  out.d_components = components_within(g, out.d);
  out.component_of.assign(n, -1);
  for (size_t i = 0; i < out.d_components.size(); ++i)
    for (int v : out.d_components[i]) out.component_of[v] = static_cast<int>(i);

  const int a_count = static_cast<int>(out.a.size());
  const int comp_count = static_cast<int>(out.d_components.size());
  std::vector<int> a_index(n, -1);
  for (int i = 0; i < a_count; ++i) a_index[out.a[i]] = i;
  std::vector<Edge> ad_edges;
  for (int i = 0; i < a_count; ++i) {
    for (int to : g.neighbors(out.a[i])) {
      if (out.component_of[to] >= 0) {
        ad_edges.emplace_back(i, a_count + out.component_of[to]);
      }
    }
  }
  std::sort(ad_edges.begin(), ad_edges.end());
  ad_edges.erase(std::unique(ad_edges.begin(), ad_edges.end()), ad_edges.end());
  out.attachment_graph = Graph(a_count + comp_count, std::move(ad_edges));

  out.rho = 1;
  for (int i = 0; i < a_count; ++i)
    out.rho = std::max(out.rho, out.attachment_graph.degree(i));

#ifndef NDEBUG
  for (const auto& component : out.d_components)
    assert(is_factor_critical(induced_subgraph(g, component).graph));
  assert(has_perfect_matching(induced_subgraph(g, out.c).graph));
#endif
  return out;
}

bool is_factor_critical(const Graph& g) {
  const int n = g.vertex_count();
  if (n % 2 == 0 && n > 0) return false;
  for (int v = 0; v < n; ++v) {
    if (!has_perfect_matching(delete_vertices(g, {v}).graph)) return false;
  }
  return true;
}

int rho(const Graph& g) { return gallai_edmonds(g).rho; }

}  // namespace equimatch
