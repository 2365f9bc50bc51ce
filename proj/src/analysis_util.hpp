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

// Internal helpers shared by the gap deciders and the defect computations.
// Not part of the public interface.

#ifndef EQUIMATCH_SRC_ANALYSIS_UTIL_H_
#define EQUIMATCH_SRC_ANALYSIS_UTIL_H_

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"

namespace equimatch::detail {

// Visits subsets of `universe` with exactly `target` elements, lexicographic.
// Return false from the visitor to stop; the function reports whether the
// walk ran to completion.
inline bool for_each_subset(const std::vector<int>& universe, int target,
                            const std::function<bool(const std::vector<int>&)>& visit) {
  if (target < 0 || target > static_cast<int>(universe.size())) return true;
  std::vector<int> chosen;
  chosen.reserve(target);
  std::function<bool(size_t)> walk = [&](size_t from) {
    if (static_cast<int>(chosen.size()) == target) return visit(chosen);
    const size_t needed = target - chosen.size();
    for (size_t i = from; i + needed <= universe.size(); ++i) {
      chosen.push_back(universe[i]);
      const bool keep_going = walk(i + 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return walk(0);
}

// Same, but restricted to subsets independent in g.
inline bool for_each_independent_subset(
    const Graph& g, const std::vector<int>& universe, int target,
    const std::function<bool(const std::vector<int>&)>& visit) {
  if (target < 0 || target > static_cast<int>(universe.size())) return true;
  std::vector<int> chosen;
  chosen.reserve(target);
  std::function<bool(size_t)> walk = [&](size_t from) {
    if (static_cast<int>(chosen.size()) == target) return visit(chosen);
    const size_t needed = target - chosen.size();
    for (size_t i = from; i + needed <= universe.size(); ++i) {
      const int v = universe[i];
      bool clash = false;
      for (int c : chosen) {
        if (g.has_edge(c, v)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      chosen.push_back(v);
      const bool keep_going = walk(i + 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return walk(0);
}

// Closed neighborhood of a vertex set, sorted.
inline std::vector<int> closed_neighborhood(const Graph& g,
                                            const std::vector<int>& set) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (int v : set) {
    mark[v] = 1;
    for (int to : g.neighbors(v)) mark[to] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

// Open neighborhood of a vertex set, sorted. A member of the set appears iff
// it is adjacent to another member.
inline std::vector<int> open_neighborhood(const Graph& g,
                                          const std::vector<int>& set) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (int v : set)
    for (int to : g.neighbors(v)) mark[to] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

// Enumerates inclusion-minimal matchings that saturate `targets` while
// avoiding `forbidden`, in lexicographic order. Minimality holds because the
// edges are vertex-disjoint and each one is picked for the lowest target it
// saturates, so no edge is redundant.
class MinimalSaturatorEnum {
 public:
  MinimalSaturatorEnum(const Graph& g, std::vector<int> targets,
                       const std::vector<int>& forbidden,
                       std::function<bool(const Matching&)> visit)
      : g_(g), targets_(std::move(targets)), visit_(std::move(visit)),
        blocked_(g.vertex_count(), 0), used_(g.vertex_count(), 0) {
    for (int v : forbidden) blocked_[v] = 1;
  }

  bool run() { return walk(0); }

 private:
  bool walk(size_t i) {
    while (i < targets_.size() && used_[targets_[i]]) ++i;
    if (i == targets_.size()) return visit_(make_matching(edges_));
    const int a = targets_[i];
    if (blocked_[a]) return true;  // cannot be saturated without a clash
    for (int x : g_.neighbors(a)) {
      if (blocked_[x] || used_[x]) continue;
      used_[a] = used_[x] = 1;
      edges_.push_back(make_edge(a, x));
      const bool keep_going = walk(i + 1);
      edges_.pop_back();
      used_[a] = used_[x] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<int> targets_;
  std::function<bool(const Matching&)> visit_;
  std::vector<char> blocked_;
  std::vector<char> used_;
  std::vector<Edge> edges_;
};

// Memoized perfect matching and matching number queries on induced subgraphs
// of one fixed host graph. Keys are vertex bitmasks, so memoization engages
// only for hosts with at most 64 vertices; larger hosts fall through to
// direct computation. Single call site lifetime, not thread shared.
class SubgraphCache {
 public:
  explicit SubgraphCache(const Graph& g)
      : g_(&g), maskable_(g.vertex_count() <= 64) {}

  bool has_perfect_matching_on(const std::vector<int>& kept) {
    if (!maskable_) return has_perfect_matching(induced_subgraph(*g_, kept).graph);
    const uint64_t key = mask_of(kept);
    auto it = pm_.find(key);
    if (it != pm_.end()) return it->second;
    const bool result = has_perfect_matching(induced_subgraph(*g_, kept).graph);
    pm_.emplace(key, result);
    return result;
  }

  int matching_number_on(const std::vector<int>& kept) {
    if (!maskable_) return matching_number(induced_subgraph(*g_, kept).graph);
    const uint64_t key = mask_of(kept);
    auto it = nu_.find(key);
    if (it != nu_.end()) return it->second;
    const int result = matching_number(induced_subgraph(*g_, kept).graph);
    nu_.emplace(key, result);
    return result;
  }

 private:
  uint64_t mask_of(const std::vector<int>& kept) const {
    uint64_t mask = 0;
    for (int v : kept) mask |= uint64_t{1} << v;
    return mask;
  }

  const Graph* g_;
  bool maskable_;
  std::unordered_map<uint64_t, bool> pm_;
  std::unordered_map<uint64_t, int> nu_;
};

}  // namespace equimatch::detail

#endif  // EQUIMATCH_SRC_ANALYSIS_UTIL_H_
