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

#include "equimatch/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace equimatch {

std::vector<int> Matching::covered_vertices() const {
  std::vector<int> covered;
  covered.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    covered.push_back(u);
    covered.push_back(v);
  }
  std::sort(covered.begin(), covered.end());
  return covered;
}

std::vector<int> Matching::exposed_vertices(const Graph& g) const {
  std::vector<char> hit(g.vertex_count(), 0);
  for (const auto& [u, v] : edges) {
    hit.at(u) = 1;
    hit.at(v) = 1;
  }
  std::vector<int> exposed;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!hit[v]) exposed.push_back(v);
  return exposed;
}

bool Matching::covers(int v) const {
  for (const auto& [a, b] : edges)
    if (a == v || b == v) return true;
  return false;
}

std::optional<int> Matching::mate(int v) const {
  for (const auto& [a, b] : edges) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return std::nullopt;
}

Matching make_matching(std::vector<Edge> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return Matching{std::move(edges)};
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& [u, v] : m.edges) {
    if (!g.has_edge(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
  if (!is_valid_matching(g, m)) {
    throw std::invalid_argument("not a matching of the given graph");
  }
  std::vector<char> exposed(g.vertex_count(), 1);
  for (const auto& [u, v] : m.edges) exposed[u] = exposed[v] = 0;
  for (const auto& [u, v] : g.edges())
    if (exposed[u] && exposed[v]) return false;
  return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  return is_valid_matching(g, m) && 2 * m.size() == g.vertex_count();
}

namespace {

// Maximum matching in a general graph via alternating BFS with blossom
// contraction. `base` tracks the contracted pseudo-vertex of each blossom.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        on_stem_(n_) {}

  std::vector<int> solve() {
    greedy_seed();
    for (int v = 0; v < n_; ++v) {
      if (match_[v] == -1) {
        int leaf = find_augmenting_path(v);
        if (leaf != -1) augment(leaf);
      }
    }
    return match_;
  }

 private:
  void greedy_seed() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int to : g_.neighbors(v)) {
        if (match_[to] == -1) {
          match_[v] = to;
          match_[to] = v;
          break;
        }
      }
    }
  }

  int lowest_common_base(int a, int b) {
    std::fill(on_stem_.begin(), on_stem_.end(), 0);
    int v = a;
    while (true) {
      v = base_[v];
      on_stem_[v] = 1;
      if (match_[v] == -1) break;
      v = parent_[match_[v]];
    }
    v = b;
    while (true) {
      v = base_[v];
      if (on_stem_[v]) return v;
      v = parent_[match_[v]];
    }
  }

  void mark_blossom_path(int v, int stop, int child, std::vector<char>& in_blossom) {
    while (base_[v] != stop) {
      in_blossom[base_[v]] = 1;
      in_blossom[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // BFS from `root`; returns an exposed leaf of an augmenting path or -1.
  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract the blossom around its base.
          const int stem = lowest_common_base(v, to);
          std::vector<char> in_blossom(n_, 0);
          mark_blossom_path(v, stem, to, in_blossom);
          mark_blossom_path(to, stem, v, in_blossom);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = stem;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int leaf) {
    int v = leaf;
    while (v != -1) {
      const int pv = parent_[v];
      const int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> on_stem_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  auto mate = BlossomMatcher(g).solve();
  std::vector<Edge> edges;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  return make_matching(std::move(edges));
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool has_perfect_matching(const Graph& g) {
  return g.vertex_count() % 2 == 0 && 2 * matching_number(g) == g.vertex_count();
}

namespace {

// Decides vertices in ascending order: match the lowest undecided vertex to
// an undecided neighbor, or leave it exposed when no already-exposed neighbor
// would break maximality. The pairwise check makes the final exposed set
// independent exactly when every branch survives, so each emitted matching is
// maximal and each maximal matching is emitted once, in lexicographic order.
class MaximalMatchingEnumerator {
 public:
  MaximalMatchingEnumerator(const Graph& g, std::optional<int> size_cap,
                            const std::function<bool(const Matching&)>& visit)
      : g_(g), cap_(size_cap), visit_(visit), state_(g.vertex_count(), kUndecided) {}

  void run() { walk(0); }

 private:
  static constexpr int kUndecided = -1;
  static constexpr int kExposed = -2;

  bool walk(int v) {
    const int n = g_.vertex_count();
    while (v < n && state_[v] != kUndecided) ++v;
    if (v == n) {
      return visit_(Matching{stack_});
    }
    if (!cap_ || static_cast<int>(stack_.size()) < *cap_) {
      for (int to : g_.neighbors(v)) {
        if (state_[to] != kUndecided) continue;
        state_[v] = to;
        state_[to] = v;
        stack_.emplace_back(v, to);
        const bool keep_going = walk(v + 1);
        stack_.pop_back();
        state_[v] = kUndecided;
        state_[to] = kUndecided;
        if (!keep_going) return false;
      }
    }
    bool can_expose = true;
    for (int to : g_.neighbors(v)) {
      if (state_[to] == kExposed) {
        can_expose = false;
        break;
      }
    }
    if (can_expose) {
      state_[v] = kExposed;
      const bool keep_going = walk(v + 1);
      state_[v] = kUndecided;
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  std::optional<int> cap_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<int> state_;
  std::vector<Edge> stack_;
};

}  // namespace

void for_each_maximal_matching(const Graph& g,
                               const std::function<bool(const Matching&)>& visit,
                               std::optional<int> size_cap) {
  MaximalMatchingEnumerator(g, size_cap, visit).run();
}

std::vector<Matching> enumerate_maximal_matchings(const Graph& g,
                                                  std::optional<int> size_cap) {
  std::vector<Matching> all;
  for_each_maximal_matching(
      g,
      [&](const Matching& m) {
        all.push_back(m);
        return true;
      },
      size_cap);
  return all;
}

namespace {

// Lexicographic branch and bound over maximal matchings. Same decision order
// as the enumerator, pruned against the best size found so far, so the first
// minimum reached is the lexicographically smallest one.
class MinimumMaximalSearch {
 public:
  explicit MinimumMaximalSearch(const Graph& g)
      : g_(g), state_(g.vertex_count(), kUndecided) {}

  std::pair<Matching, int> run() {
    bound_ = greedy_maximal_extension(g_, Matching{}).size() + 1;
    walk(0);
    return {best_, best_.size()};
  }

 private:
  static constexpr int kUndecided = -1;
  static constexpr int kExposed = -2;

  void walk(int v) {
    if (static_cast<int>(stack_.size()) >= bound_) return;
    const int n = g_.vertex_count();
    while (v < n && state_[v] != kUndecided) ++v;
    if (v == n) {
      best_ = Matching{stack_};
      bound_ = best_.size();
      return;
    }
    for (int to : g_.neighbors(v)) {
      if (state_[to] != kUndecided) continue;
      state_[v] = to;
      state_[to] = v;
      stack_.emplace_back(v, to);
      walk(v + 1);
      stack_.pop_back();
      state_[v] = kUndecided;
      state_[to] = kUndecided;
    }
    for (int to : g_.neighbors(v)) {
      if (state_[to] == kExposed) return;
    }
    state_[v] = kExposed;
    walk(v + 1);
    state_[v] = kUndecided;
  }

  const Graph& g_;
  std::vector<int> state_;
  std::vector<Edge> stack_;
  Matching best_;
  int bound_ = 0;
};

}  // namespace

std::pair<Matching, int> minimum_maximal_matching(const Graph& g) {
  return MinimumMaximalSearch(g).run();
}

std::optional<Matching> find_covering_matching(const Graph& g,
                                               const std::vector<int>& s) {
  const int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (int v : s) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("set vertex " + std::to_string(v) +
                                  " not in graph");
    }
    in_s[v] = 1;
  }
  std::vector<Edge> edges = g.edges();
  std::vector<int> pendant_of;  // augmented id of the pendant for each v not in s
  int next = n;
  for (int v = 0; v < n; ++v) {
    if (!in_s[v]) {
      edges.emplace_back(v, next);
      pendant_of.push_back(next);
      ++next;
    }
  }
  if (next % 2 == 1) pendant_of.push_back(next++);
  for (size_t i = 0; i < pendant_of.size(); ++i)
    for (size_t j = i + 1; j < pendant_of.size(); ++j)
      edges.emplace_back(pendant_of[i], pendant_of[j]);
  Graph augmented(next, std::move(edges));
  Matching perfect = maximum_matching(augmented);
  if (2 * perfect.size() != next) return std::nullopt;
  std::vector<Edge> witness;
  for (const auto& [u, v] : perfect.edges)
    if (u < n && v < n) witness.emplace_back(u, v);
  return make_matching(std::move(witness));
}

bool has_matching_covering(const Graph& g, const std::vector<int>& s) {
  return find_covering_matching(g, s).has_value();
}

namespace {

// Components of m xor target that are m-augmenting paths, each listed as its
// vertex sequence and ordered by smallest endpoint.
std::vector<std::vector<int>> augmenting_components(const Graph& g,
                                                    const Matching& m,
                                                    const Matching& target) {
  const int n = g.vertex_count();
  std::vector<int> mate_m(n, -1), mate_t(n, -1);
  for (const auto& [u, v] : m.edges) {
    mate_m[u] = v;
    mate_m[v] = u;
  }
  for (const auto& [u, v] : target.edges) {
    mate_t[u] = v;
    mate_t[v] = u;
  }
  std::vector<std::vector<int>> paths;
  for (int v = 0; v < n; ++v) {
    // Augmenting paths start at a vertex exposed by m and covered by target.
    if (mate_m[v] != -1 || mate_t[v] == -1) continue;
    std::vector<int> path{v};
    int cur = v;
    bool use_target = true;
    while (true) {
      const int next = use_target ? mate_t[cur] : mate_m[cur];
      if (next == -1) break;
      path.push_back(next);
      cur = next;
      use_target = !use_target;
    }
    // Keep only genuine augmenting paths (both ends m-exposed), each once.
    if (mate_m[path.back()] == -1 && path.back() > v) {
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

}  // namespace

Matching extend_maximal_preserving_coverage(const Graph& g, const Matching& m,
                                            int k) {
  if (!is_maximal_matching(g, m)) {
    throw std::invalid_argument("base matching must be maximal");
  }
  const Matching maximum = maximum_matching(g);
  if (k < m.size() || k > maximum.size()) {
    throw std::invalid_argument("target size " + std::to_string(k) +
                                " outside [" + std::to_string(m.size()) + ", " +
                                std::to_string(maximum.size()) + "]");
  }
  auto paths = augmenting_components(g, m, maximum);
  std::vector<Edge> edges = m.edges;
  int remaining = k - m.size();
  for (const auto& path : paths) {
    if (remaining == 0) break;
    // Flip the path: drop its matched edges, take the unmatched ones.
    for (size_t i = 0; i + 1 < path.size(); i += 2) {
      edges.push_back(make_edge(path[i], path[i + 1]));
    }
    for (size_t i = 1; i + 1 < path.size(); i += 2) {
      const Edge drop = make_edge(path[i], path[i + 1]);
      edges.erase(std::find(edges.begin(), edges.end(), drop));
    }
    --remaining;
  }
  return make_matching(std::move(edges));
}

std::optional<Matching> maximal_matching_of_size(const Graph& g, int k) {
  const auto [minimum, beta] = minimum_maximal_matching(g);
  if (k < beta || k > matching_number(g)) return std::nullopt;
  return extend_maximal_preserving_coverage(g, minimum, k);
}

Matching greedy_maximal_extension(const Graph& g, const Matching& base) {
  if (!is_valid_matching(g, base)) {
    throw std::invalid_argument("base is not a matching of the given graph");
  }
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& [u, v] : base.edges) used[u] = used[v] = 1;
  std::vector<Edge> edges = base.edges;
  for (const auto& [u, v] : g.edges()) {
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      edges.emplace_back(u, v);
    }
  }
  return make_matching(std::move(edges));
}

MatchingMetrics compute_matching_metrics(const Graph& g, int beta_cap) {
  MatchingMetrics metrics;
  metrics.nu = matching_number(g);
  metrics.deficiency = g.vertex_count() - 2 * metrics.nu;
  if (g.vertex_count() <= beta_cap) {
    metrics.beta = minimum_maximal_matching(g).second;
    metrics.mu = metrics.nu - *metrics.beta;
  }
  return metrics;
}

}  // namespace equimatch
