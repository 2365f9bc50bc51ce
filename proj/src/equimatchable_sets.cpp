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

#include "equimatch/equimatchable_sets.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_map>

#include "analysis_util.hpp"
#include "equimatch/matching_gap.hpp"

namespace equimatch {

namespace {

Matching map_to_parent(const Matching& m, const std::vector<int>& to_parent) {
  std::vector<Edge> edges;
  edges.reserve(m.edges.size());
  for (const auto& [u, v] : m.edges)
    edges.push_back(make_edge(to_parent[u], to_parent[v]));
  return make_matching(std::move(edges));
}

// Memoized per-host answers reused across subset candidates.
struct SetAnalysisCaches {
  explicit SetAnalysisCaches(const Graph& g)
      : host(&g), subgraphs(g), maskable(g.vertex_count() <= 64) {}

  const Graph* host;
  detail::SubgraphCache subgraphs;
  bool maskable;
  std::unordered_map<uint64_t, bool> equimatchable;
  std::unordered_map<uint64_t, bool> coverable;

  uint64_t mask_of(const std::vector<int>& verts) const {
    uint64_t mask = 0;
    for (int v : verts) mask |= uint64_t{1} << v;
    return mask;
  }

  bool induced_equimatchable(const std::vector<int>& verts) {
    if (!maskable) {
      return is_equimatchable(induced_subgraph(*host, verts).graph);
    }
    const uint64_t key = mask_of(verts);
    auto it = equimatchable.find(key);
    if (it != equimatchable.end()) return it->second;
    const bool result = is_equimatchable(induced_subgraph(*host, verts).graph);
    equimatchable.emplace(key, result);
    return result;
  }

  bool set_coverable(const std::vector<int>& s) {
    if (!maskable) return has_matching_covering(*host, s);
    const uint64_t key = mask_of(s);
    auto it = coverable.find(key);
    if (it != coverable.end()) return it->second;
    const bool result = has_matching_covering(*host, s);
    coverable.emplace(key, result);
    return result;
  }
};

// Core of the fixed-set test. Streams the inclusion-minimal matchings
// covering s; a counterexample pair is assembled only on demand.
EquimatchableSetReport classify_set(const Graph& g, std::vector<int> s,
                                    SetAnalysisCaches& caches,
                                    bool want_counterexample) {
  EquimatchableSetReport report;
  report.set = s;
  if (!caches.set_coverable(s)) {
    report.verdict = SetVerdict::Vacuous;
    return report;
  }

  std::vector<int> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  auto exposed_by = [&](const Matching& m) {
    std::vector<int> covered = m.covered_vertices();
    std::vector<int> rest;
    std::set_difference(all.begin(), all.end(), covered.begin(), covered.end(),
                        std::back_inserter(rest));
    return rest;
  };

  // A maximal matching of an equimatchable part; every maximal matching
  // there is maximum, so greedy suffices.
  auto lift_full = [&](const Matching& cover) {
    auto sub = induced_subgraph(g, exposed_by(cover));
    Matching inner = greedy_maximal_extension(sub.graph, Matching{});
    std::vector<Edge> edges = cover.edges;
    for (const auto& e : map_to_parent(inner, sub.to_parent).edges)
      edges.push_back(e);
    return make_matching(std::move(edges));
  };

  bool have_reference = false;
  Matching reference_cover;
  int reference_total = 0;
  bool decided_not = false;

  detail::MinimalSaturatorEnum minimal_covers(
      g, s, {}, [&](const Matching& cover) {
        const auto rest = exposed_by(cover);
        if (!caches.induced_equimatchable(rest)) {
          if (want_counterexample) {
            auto sub = induced_subgraph(g, rest);
            auto witness = find_gap_configuration(sub.graph);
            Matching lo = map_to_parent(witness->smaller, sub.to_parent);
            Matching hi = map_to_parent(witness->larger, sub.to_parent);
            std::vector<Edge> lo_edges = cover.edges;
            lo_edges.insert(lo_edges.end(), lo.edges.begin(), lo.edges.end());
            std::vector<Edge> hi_edges = cover.edges;
            hi_edges.insert(hi_edges.end(), hi.edges.begin(), hi.edges.end());
            report.counterexample = {make_matching(std::move(lo_edges)),
                                     make_matching(std::move(hi_edges))};
          }
          decided_not = true;
          return false;
        }
        const int total = cover.size() + caches.subgraphs.matching_number_on(rest);
        if (!have_reference) {
          have_reference = true;
          reference_cover = cover;
          reference_total = total;
          return true;
        }
        if (total != reference_total) {
          if (want_counterexample) {
            Matching first = lift_full(reference_cover);
            Matching second = lift_full(cover);
            if (first.size() > second.size()) std::swap(first, second);
            report.counterexample = {std::move(first), std::move(second)};
          }
          decided_not = true;
          return false;
        }
        return true;
      });
  minimal_covers.run();

  report.verdict =
      decided_not ? SetVerdict::NotEquimatchable : SetVerdict::Equimatchable;
  return report;
}

void validate_set(const Graph& g, std::vector<int>& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("set vertex " + std::to_string(v) +
                                  " not in graph");
    }
  }
}

}  // namespace

EquimatchableSetReport check_equimatchable_set(const Graph& g, std::vector<int> s) {
  validate_set(g, s);
  SetAnalysisCaches caches(g);
  auto report = classify_set(g, std::move(s), caches, true);
  if (report.counterexample) {
    const auto& [lo, hi] = *report.counterexample;
    if (!is_maximal_matching(g, lo) || !is_maximal_matching(g, hi) ||
        lo.size() >= hi.size()) {
      throw std::logic_error("counterexample pair failed verification");
    }
  }
  return report;
}

EtaResult eta_by_subset_search(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  SetAnalysisCaches caches(g);
  for (int k = 0; k <= n; ++k) {
    EtaResult result{k, {}};
    bool found = false;
    detail::for_each_subset(all, k, [&](const std::vector<int>& s) {
      if (classify_set(g, s, caches, false).verdict != SetVerdict::NotEquimatchable) {
        result.witness = s;
        found = true;
        return false;
      }
      return true;
    });
    if (found) return result;
  }
  // The full vertex set is always equimatchable.
  return EtaResult{n, all};
}

Exp2Hypergraph build_exp2(const Graph& g) {
  const int nu = matching_number(g);
  Exp2Hypergraph out;
  out.vertex_count = g.vertex_count();
  out.uniformity = g.vertex_count() - 2 * nu + 2;
  std::set<std::vector<int>> hyperedges;
  for_each_maximal_matching(
      g,
      [&](const Matching& m) {
        if (m.size() == nu - 1) hyperedges.insert(m.exposed_vertices(g));
        return true;
      },
      nu - 1);
  out.hyperedges.assign(hyperedges.begin(), hyperedges.end());
  return out;
}

namespace {

struct HittingSetSearch {
  const std::vector<std::vector<int>>& hyperedges;
  std::vector<char> chosen;
  std::vector<int> stack;
  std::vector<int> best;

  explicit HittingSetSearch(const std::vector<std::vector<int>>& edges, int n)
      : hyperedges(edges), chosen(n, 0) {}

  const std::vector<int>* first_unhit() const {
    for (const auto& edge : hyperedges) {
      bool hit = false;
      for (int v : edge) {
        if (chosen[v]) {
          hit = true;
          break;
        }
      }
      if (!hit) return &edge;
    }
    return nullptr;
  }

  bool attempt(int budget) {
    const std::vector<int>* edge = first_unhit();
    if (edge == nullptr) {
      best = stack;
      return true;
    }
    if (budget == 0) return false;
    for (int v : *edge) {
      chosen[v] = 1;
      stack.push_back(v);
      if (attempt(budget - 1)) return true;
      stack.pop_back();
      chosen[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<int> minimum_hitting_set(
    const std::vector<std::vector<int>>& hyperedges) {
  int n = 0;
  for (const auto& edge : hyperedges) {
    if (edge.empty()) {
      throw std::invalid_argument("empty hyperedge cannot be hit");
    }
    for (int v : edge) n = std::max(n, v + 1);
  }
  // Greedy cover as the depth bound: always pick the vertex hitting the most
  // of the remaining hyperedges.
  std::vector<char> hit(hyperedges.size(), 0);
  int upper = 0;
  std::vector<char> greedy_chosen(n, 0);
  while (true) {
    std::vector<int> gain(n, 0);
    bool open = false;
    for (size_t i = 0; i < hyperedges.size(); ++i) {
      if (hit[i]) continue;
      open = true;
      for (int v : hyperedges[i]) ++gain[v];
    }
    if (!open) break;
    const int pick = static_cast<int>(
        std::max_element(gain.begin(), gain.end()) - gain.begin());
    greedy_chosen[pick] = 1;
    ++upper;
    for (size_t i = 0; i < hyperedges.size(); ++i) {
      if (hit[i]) continue;
      for (int v : hyperedges[i]) {
        if (v == pick) {
          hit[i] = 1;
          break;
        }
      }
    }
  }
  HittingSetSearch search(hyperedges, n);
  for (int budget = 0; budget <= upper; ++budget) {
    if (search.attempt(budget)) {
      std::sort(search.best.begin(), search.best.end());
      return search.best;
    }
  }
  throw std::logic_error("greedy bound missed the optimum");
}

EtaResult eta_by_hitting_set(const Graph& g) {
  const auto exp2 = build_exp2(g);
  auto witness = minimum_hitting_set(exp2.hyperedges);
  return EtaResult{static_cast<int>(witness.size()), std::move(witness)};
}

bool is_expandable(const Graph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (!has_perfect_matching(delete_vertices(g, {u, v}).graph)) return false;
    }
  }
  return true;
}

EtaResult eta_expandable_shortcut(const Graph& g) {
  if (!is_expandable(g)) {
    throw std::invalid_argument("shortcut requires an expandable graph");
  }
  if (!has_perfect_matching(g)) {
    throw std::invalid_argument("shortcut requires a perfect matching");
  }
  const auto clique = maximum_clique(g);
  std::vector<char> in_clique(g.vertex_count(), 0);
  for (int v : clique) in_clique[v] = 1;
  EtaResult result;
  result.eta = g.vertex_count() - static_cast<int>(clique.size());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_clique[v]) result.witness.push_back(v);
  return result;
}

int eta_cycle_closed_form(int n) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  if (n == 3 || n == 4 || n == 5 || n == 7) return 0;
  if (n % 2 == 0) return n / 2;
  return (n - 3) / 2;
}

BoundsReport check_bounds(const Graph& g) {
  BoundsReport report;
  report.nu = matching_number(g);
  report.mu = report.nu - minimum_maximal_matching(g).second;
  report.eta = eta_by_hitting_set(g).eta;
  report.two_nu_minus_2 = 2 * report.nu - 2;
  report.holds = report.mu <= report.eta &&
                 (g.edge_count() == 0 || report.eta <= report.two_nu_minus_2);
  return report;
}

}  // namespace equimatch
