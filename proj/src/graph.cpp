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

#include "equimatch/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace equimatch {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range for n = " +
                                  std::to_string(n));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) +
                                ", " + std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int offset = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  edges.reserve(edges.size() + b.edges().size());
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(offset + b.vertex_count(), std::move(edges));
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  std::vector<Edge> edges = a.edges();
  edges.reserve(edges.size() + b.edges().size() +
                static_cast<size_t>(na) * static_cast<size_t>(nb));
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) edges.emplace_back(u, na + v);
  return Graph(na + nb, std::move(edges));
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  const int nb = b.vertex_count();
  auto id = [nb](int u, int v) { return u * nb + v; };
  std::vector<Edge> edges;
  for (int u = 0; u < na; ++u)
    for (const auto& [v, w] : b.edges()) edges.emplace_back(id(u, v), id(u, w));
  for (const auto& [u, w] : a.edges())
    for (int v = 0; v < nb; ++v) edges.emplace_back(id(u, v), id(w, v));
  return Graph(na * nb, std::move(edges));
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph double_subdivide(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(3 * g.edges().size());
  int next = n;
  for (const auto& [u, v] : g.edges()) {
    const int x = next++;
    const int y = next++;
    edges.emplace_back(u, x);
    edges.emplace_back(x, y);
    edges.emplace_back(y, v);
  }
  return Graph(next, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> index(g.vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (!g.has_vertex(vertices[i])) {
      throw std::invalid_argument("vertex " + std::to_string(vertices[i]) +
                                  " not in graph");
    }
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return InducedSubgraph{Graph(static_cast<int>(vertices.size()), std::move(edges)),
                         std::move(vertices)};
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : removed) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    }
    gone[v] = 1;
  }
  std::vector<int> kept;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) kept.push_back(v);
  return induced_subgraph(g, std::move(kept));
}

std::vector<std::vector<int>> components_within(const Graph& g,
                                                const std::vector<int>& vertices) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (int v : vertices) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    }
    inside[v] = 1;
  }
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::vector<int>> components;
  for (int root : vertices) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> component;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (int to : g.neighbors(v)) {
        if (inside[to] && !seen[to]) {
          seen[to] = 1;
          stack.push_back(to);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

Graph path_graph(int n) {
  if (n < 0) throw std::invalid_argument("path length must be non-negative");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs at least 3 vertices, got " +
                                std::to_string(n));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("part sizes must be non-negative");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

Graph disjoint_edges_graph(int k) {
  if (k < 0) throw std::invalid_argument("copy count must be non-negative");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * k, std::move(edges));
}

Graph build_family(const std::string& kind, const std::vector<int>& params) {
  auto want = [&](size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family '" + kind + "' expects " +
                                  std::to_string(count) + " parameter(s), got " +
                                  std::to_string(params.size()));
    }
  };
  if (kind == "path") {
    want(1);
    return path_graph(params[0]);
  }
  if (kind == "cycle") {
    want(1);
    return cycle_graph(params[0]);
  }
  if (kind == "complete") {
    want(1);
    return complete_graph(params[0]);
  }
  if (kind == "complete-bipartite") {
    want(2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (kind == "star") {
    want(1);
    return star_graph(params[0]);
  }
  if (kind == "kk2") {
    want(1);
    return disjoint_edges_graph(params[0]);
  }
  throw std::invalid_argument("unknown family '" + kind + "'");
}

namespace {

std::vector<uint64_t> adjacency_masks(const Graph& g) {
  std::vector<uint64_t> nb(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    nb[u] |= uint64_t{1} << v;
    nb[v] |= uint64_t{1} << u;
  }
  return nb;
}

void require_desk_scale(const Graph& g, const char* what) {
  if (g.vertex_count() > 64) {
    throw std::invalid_argument(std::string(what) +
                                " supports at most 64 vertices, got " +
                                std::to_string(g.vertex_count()));
  }
}

// Branch and bound for a maximum independent subset of `cand`.
struct IndependentSetSearch {
  const std::vector<uint64_t>& nb;
  int best = 0;
  uint64_t best_set = 0;

  void run(uint64_t cand, uint64_t chosen, int size) {
    // Vertices isolated within cand can always be taken.
    uint64_t scan = cand;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      if ((nb[v] & cand) == 0) {
        cand &= ~(uint64_t{1} << v);
        chosen |= uint64_t{1} << v;
        ++size;
      }
    }
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = size;
      best_set = chosen;
      return;
    }
    // Branch on a vertex of maximum degree inside cand.
    int pick = -1, pick_deg = -1;
    for (uint64_t s = cand; s;) {
      const int v = std::countr_zero(s);
      s &= s - 1;
      const int d = std::popcount(nb[v] & cand);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    const uint64_t bit = uint64_t{1} << pick;
    run(cand & ~(nb[pick] | bit), chosen | bit, size + 1);
    run(cand & ~bit, chosen, size);
  }
};

// Branch and bound for a maximum clique.
struct CliqueSearch {
  const std::vector<uint64_t>& nb;
  int best = 0;
  uint64_t best_set = 0;

  void run(uint64_t cand, uint64_t chosen, int size) {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = size;
      best_set = chosen;
      return;
    }
    int pick = -1, pick_deg = -1;
    for (uint64_t s = cand; s;) {
      const int v = std::countr_zero(s);
      s &= s - 1;
      const int d = std::popcount(nb[v] & cand);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    const uint64_t bit = uint64_t{1} << pick;
    run(cand & nb[pick], chosen | bit, size + 1);
    run(cand & ~bit, chosen, size);
  }
};

std::vector<int> bits_to_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

std::vector<int> maximum_independent_set(const Graph& g) {
  require_desk_scale(g, "maximum_independent_set");
  const int n = g.vertex_count();
  if (n == 0) return {};
  auto nb = adjacency_masks(g);
  IndependentSetSearch search{nb};
  const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  search.run(all, 0, 0);
  return bits_to_vertices(search.best_set);
}

std::vector<int> maximum_clique(const Graph& g) {
  require_desk_scale(g, "maximum_clique");
  const int n = g.vertex_count();
  if (n == 0) return {};
  auto nb = adjacency_masks(g);
  CliqueSearch search{nb};
  const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  search.run(all, 0, 0);
  return bits_to_vertices(search.best_set);
}

int independence_number(const Graph& g) {
  return static_cast<int>(maximum_independent_set(g).size());
}

int vertex_cover_number(const Graph& g) {
  return g.vertex_count() - independence_number(g);
}

int clique_number(const Graph& g) {
  return static_cast<int>(maximum_clique(g).size());
}

GraphInvariants compute_invariants(const Graph& g) {
  GraphInvariants inv;
  inv.alpha = independence_number(g);
  inv.tau = g.vertex_count() - inv.alpha;
  inv.omega = clique_number(g);
  return inv;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

Graph read_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> seen;  // lazily sized adjacency bits

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    if (!have_n) {
      long long value;
      if (!(fields >> value)) continue;  // blank or comment-only line
      std::string rest;
      if (fields >> rest) throw ParseError(line_no, "expected a single vertex count");
      if (value < 0) throw ParseError(line_no, "vertex count must be non-negative");
      n = static_cast<int>(value);
      have_n = true;
      continue;
    }
    long long u, v;
    if (!(fields >> u)) continue;
    if (!(fields >> v)) throw ParseError(line_no, "expected two vertex ids");
    std::string rest;
    if (fields >> rest) throw ParseError(line_no, "trailing content after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line_no, "vertex id out of range [0, " +
                                    std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(line_no, "edges must be written as 'u v' with u < v");
    if (seen.empty()) seen.assign(n, {});
    auto& row = seen[u];
    if (row.empty()) row.assign(n, 0);
    if (row[v]) throw ParseError(line_no, "edge re-declared");
    row[v] = 1;
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_n) throw ParseError(line_no, "missing vertex count line");
  return Graph(n, std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace equimatch
