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

// Naive reference computations for cross-checking the engine. Everything here
// works from first principles over explicit edge subsets and stays
// independent of the library's algorithms.

#ifndef EQUIMATCH_TESTS_SUPPORT_ORACLES_H_
#define EQUIMATCH_TESTS_SUPPORT_ORACLES_H_

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"

namespace oracle {

using equimatch::Edge;
using equimatch::Graph;
using equimatch::Matching;

// Every matching, by include/exclude recursion over the edge list.
inline void for_each_matching(const Graph& g,
                              const std::function<void(const std::vector<Edge>&)>& cb) {
  const auto& edges = g.edges();
  std::vector<Edge> current;
  std::vector<char> used(g.vertex_count(), 0);
  std::function<void(size_t)> walk = [&](size_t i) {
    if (i == edges.size()) {
      cb(current);
      return;
    }
    walk(i + 1);
    const auto& [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      current.push_back(edges[i]);
      walk(i + 1);
      current.pop_back();
      used[u] = used[v] = 0;
    }
  };
  walk(0);
}

inline bool matching_is_maximal(const Graph& g, const std::vector<Edge>& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& [u, v] : m) used[u] = used[v] = 1;
  for (const auto& [u, v] : g.edges())
    if (!used[u] && !used[v]) return false;
  return true;
}

inline std::vector<std::vector<Edge>> all_maximal_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  for_each_matching(g, [&](const std::vector<Edge>& m) {
    if (matching_is_maximal(g, m)) {
      auto sorted = m;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline int nu(const Graph& g) {
  int best = 0;
  for_each_matching(g, [&](const std::vector<Edge>& m) {
    best = std::max(best, static_cast<int>(m.size()));
  });
  return best;
}

inline int beta(const Graph& g) {
  int best = g.vertex_count();
  for (const auto& m : all_maximal_matchings(g))
    best = std::min(best, static_cast<int>(m.size()));
  return best;
}

inline bool equimatchable(const Graph& g) {
  const auto all = all_maximal_matchings(g);
  for (const auto& m : all)
    if (m.size() != all.front().size()) return false;
  return true;
}

inline bool covers(const std::vector<Edge>& m, const std::vector<int>& s) {
  for (int v : s) {
    bool hit = false;
    for (const auto& [a, b] : m) {
      if (a == v || b == v) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

inline bool has_covering_matching(const Graph& g, const std::vector<int>& s) {
  bool found = false;
  for_each_matching(g, [&](const std::vector<Edge>& m) {
    if (!found && covers(m, s)) found = true;
  });
  return found;
}

// A set is equimatchable when the maximal matchings covering it carry one
// size; with none covering it the condition is vacuous.
inline bool set_equimatchable(const std::vector<std::vector<Edge>>& maximal,
                              const std::vector<int>& s) {
  int seen = -1;
  for (const auto& m : maximal) {
    if (!covers(m, s)) continue;
    if (seen == -1) seen = static_cast<int>(m.size());
    else if (seen != static_cast<int>(m.size())) return false;
  }
  return true;
}

inline int eta(const Graph& g) {
  const auto maximal = all_maximal_matchings(g);
  const int n = g.vertex_count();
  for (int k = 0; k <= n; ++k) {
    std::vector<int> chosen;
    bool found = false;
    std::function<void(int)> walk = [&](int from) {
      if (found) return;
      if (static_cast<int>(chosen.size()) == k) {
        if (set_equimatchable(maximal, chosen)) found = true;
        return;
      }
      for (int v = from; v < n && !found; ++v) {
        chosen.push_back(v);
        walk(v + 1);
        chosen.pop_back();
      }
    };
    walk(0);
    if (found) return k;
  }
  return n;
}

inline int alpha(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  std::vector<int> chosen;
  std::function<void(int)> walk = [&](int v) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int next = v; next < n; ++next) {
      bool ok = true;
      for (int c : chosen) {
        if (g.has_edge(c, next)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(next);
      walk(next + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return best;
}

inline int tau(const Graph& g) { return g.vertex_count() - alpha(g); }

// Exhaustive search for an augmenting path: a simple alternating path joining
// two exposed vertices.
inline bool has_augmenting_path(const Graph& g, const Matching& m) {
  const int n = g.vertex_count();
  std::vector<int> mate(n, -1);
  for (const auto& [u, v] : m.edges) {
    mate[u] = v;
    mate[v] = u;
  }
  std::vector<char> visited(n, 0);
  // expect_matched: the parity of the next edge on the alternating walk.
  std::function<bool(int, bool)> walk = [&](int cur, bool expect_matched) {
    if (expect_matched) {
      const int next = mate[cur];
      if (next == -1 || visited[next]) return false;
      visited[next] = 1;
      const bool ok = walk(next, false);
      visited[next] = 0;
      return ok;
    }
    for (int to : g.neighbors(cur)) {
      if (visited[to] || mate[cur] == to) continue;
      if (mate[to] == -1) return true;
      visited[to] = 1;
      if (walk(to, true)) {
        visited[to] = 0;
        return true;
      }
      visited[to] = 0;
    }
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (mate[v] != -1) continue;
    std::fill(visited.begin(), visited.end(), 0);
    visited[v] = 1;
    if (walk(v, false)) return true;
  }
  return false;
}

inline Graph petersen() {
  return Graph(10, {{0, 1},
                    {1, 2},
                    {2, 3},
                    {3, 4},
                    {0, 4},
                    {0, 5},
                    {1, 6},
                    {2, 7},
                    {3, 8},
                    {4, 9},
                    {5, 7},
                    {7, 9},
                    {6, 9},
                    {6, 8},
                    {5, 8}});
}

// Deterministic G(n, p) from a seeded generator; p is in percent.
inline Graph random_graph(int n, int density_percent, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < density_percent) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Mixed-density pool with n drawn from [min_n, max_n].
inline std::vector<Graph> random_pool(int count, int min_n, int max_n,
                                      unsigned seed_base) {
  static constexpr int kDensities[] = {15, 30, 50, 70, 85};
  std::vector<Graph> pool;
  pool.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = min_n + static_cast<int>((seed_base + i) % (max_n - min_n + 1));
    const int density = kDensities[i % 5];
    pool.push_back(random_graph(n, density, seed_base + 977 * i));
  }
  return pool;
}

}  // namespace oracle

#endif  // EQUIMATCH_TESTS_SUPPORT_ORACLES_H_
