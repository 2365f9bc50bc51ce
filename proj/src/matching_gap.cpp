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

#include "equimatch/matching_gap.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <string>

#include "analysis_util.hpp"

namespace equimatch {

namespace {

Matching map_to_parent(const Matching& m, const std::vector<int>& to_parent) {
  std::vector<Edge> edges;
  edges.reserve(m.edges.size());
  for (const auto& [u, v] : m.edges)
    edges.push_back(make_edge(to_parent[u], to_parent[v]));
  return make_matching(std::move(edges));
}

std::vector<int> set_difference_sorted(const std::vector<int>& a,
                                       const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<std::array<int, 4>> augmenting_p4_paths(const Graph& g,
                                                    const Matching& m) {
  if (!is_maximal_matching(g, m)) {
    throw std::invalid_argument("augmenting paths are defined for maximal matchings");
  }
  std::vector<char> exposed(g.vertex_count(), 1);
  for (const auto& [a, b] : m.edges) exposed[a] = exposed[b] = 0;
  std::vector<std::array<int, 4>> paths;
  for (const auto& [a, b] : m.edges) {
    for (auto [w, y] : {std::pair{a, b}, std::pair{b, a}}) {
      for (int u : g.neighbors(w)) {
        if (!exposed[u]) continue;
        for (int v : g.neighbors(y)) {
          if (!exposed[v] || v == u) continue;
          if (u < v) paths.push_back({u, w, y, v});
        }
      }
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::optional<NonEquimatchableWitness> find_gap_configuration(const Graph& g) {
  for (const auto& [a, b] : g.edges()) {
    for (auto [w, y] : {std::pair{a, b}, std::pair{b, a}}) {
      for (int u : g.neighbors(w)) {
        if (u == y) continue;
        for (int v : g.neighbors(y)) {
          // Each unordered configuration once: its mirror appears under the
          // opposite edge orientation with the endpoints swapped.
          if (v == w || v >= u) continue;
          if (g.has_edge(u, v)) continue;
          std::vector<int> ends = {std::min(u, v), std::max(u, v)};
          std::vector<int> shielded = detail::open_neighborhood(g, ends);
          std::erase(shielded, w);
          std::erase(shielded, y);
          auto sub = delete_vertices(g, {u, v, w, y});
          std::vector<int> target;
          target.reserve(shielded.size());
          std::vector<int> index(g.vertex_count(), -1);
          for (size_t i = 0; i < sub.to_parent.size(); ++i)
            index[sub.to_parent[i]] = static_cast<int>(i);
          for (int r : shielded) target.push_back(index[r]);
          auto covering = find_covering_matching(sub.graph, target);
          if (!covering) continue;
          // Assemble the smaller maximal matching: the covering part, the
          // matched middle edge, then greedy completion away from u and v.
          std::vector<Edge> small = map_to_parent(*covering, sub.to_parent).edges;
          small.push_back(make_edge(w, y));
          std::vector<char> used(g.vertex_count(), 0);
          for (const auto& [p, q] : small) used[p] = used[q] = 1;
          used[u] = used[v] = 1;
          for (const auto& [p, q] : g.edges()) {
            if (!used[p] && !used[q]) {
              used[p] = used[q] = 1;
              small.push_back({p, q});
            }
          }
          Matching smaller = make_matching(std::move(small));
          std::vector<Edge> grown = smaller.edges;
          std::erase(grown, make_edge(w, y));
          grown.push_back(make_edge(u, w));
          grown.push_back(make_edge(y, v));
          Matching larger = make_matching(std::move(grown));
          if (!is_maximal_matching(g, smaller) || !is_maximal_matching(g, larger)) {
            throw std::logic_error("gap configuration produced a non-maximal witness");
          }
          return NonEquimatchableWitness{{u, w, y, v}, std::move(smaller),
                                         std::move(larger)};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_equimatchable(const Graph& g) { return !find_gap_configuration(g).has_value(); }

bool gap_at_least_brute(const Graph& g, int k) {
  const int nu = matching_number(g);
  const int beta = minimum_maximal_matching(g).second;
  return nu - beta >= k;
}

std::optional<Matching> decide_gap_is_enum(const Graph& g, int k) {
  const int n = g.vertex_count();
  const int nu = matching_number(g);
  if (nu - k < 0) return std::nullopt;
  const int target = n - 2 * (nu - k);
  if (target < 0) return std::nullopt;
  std::vector<int> universe(n);
  std::iota(universe.begin(), universe.end(), 0);
  detail::SubgraphCache cache(g);
  std::optional<Matching> witness;
  detail::for_each_independent_subset(
      g, universe, target, [&](const std::vector<int>& isolated) {
        const auto kept = set_difference_sorted(universe, isolated);
        if (!cache.has_perfect_matching_on(kept)) return true;
        auto sub = induced_subgraph(g, kept);
        witness = map_to_parent(maximum_matching(sub.graph), sub.to_parent);
        return false;
      });
  if (witness) {
    if (witness->size() != nu - k || !is_maximal_matching(g, *witness)) {
      throw std::logic_error("independent-set decider produced a bad witness");
    }
  }
  return witness;
}

// ---------------------------------------------------------------------------
// Decomposition-guided decider.
// ---------------------------------------------------------------------------

namespace {

// Bipartite matching from A-side indices into component indices, restricted
// to an allowed-component predicate. Plain augmenting search; sizes here are
// tiny.
struct AttachmentMatcher {
  const Graph& attachment;  // the contracted bipartite graph
  int a_count;
  const std::vector<char>& allowed;  // per component index
  std::vector<int> comp_of_a;        // matched component per A index, or -1
  std::vector<int> a_of_comp;        // inverse, or -1

  AttachmentMatcher(const Graph& ad, int a_count_, const std::vector<char>& allowed_)
      : attachment(ad),
        a_count(a_count_),
        allowed(allowed_),
        comp_of_a(a_count_, -1),
        a_of_comp(ad.vertex_count() - a_count_, -1) {}

  bool augment_from_a(int a, std::vector<char>& seen) {
    for (int node : attachment.neighbors(a)) {
      const int comp = node - a_count;
      if (!allowed[comp] || seen[comp]) continue;
      seen[comp] = 1;
      if (a_of_comp[comp] == -1 || augment_from_a(a_of_comp[comp], seen)) {
        comp_of_a[a] = comp;
        a_of_comp[comp] = a;
        return true;
      }
    }
    return false;
  }

  bool augment_from_comp(int comp, std::vector<char>& seen) {
    for (int a : attachment.neighbors(a_count + comp)) {
      if (seen[a]) continue;
      seen[a] = 1;
      if (comp_of_a[a] == -1 || augment_from_comp(comp_of_a[a], seen)) {
        comp_of_a[a] = comp;
        a_of_comp[comp] = a;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<int> DecompositionGapCertificate::exposed_roots() const {
  std::vector<int> roots;
  for (const auto& part : component_matchings)
    if (part.exposed_root) roots.push_back(*part.exposed_root);
  std::sort(roots.begin(), roots.end());
  return roots;
}

Matching DecompositionGapCertificate::reassembled() const {
  std::vector<Edge> edges = attachment_matching.edges;
  for (const auto& part : component_matchings)
    edges.insert(edges.end(), part.matching.edges.begin(), part.matching.edges.end());
  return make_matching(std::move(edges));
}

std::optional<DecompositionGapCertificate> decide_gap_decomposition(const Graph& g,
                                                                    int k) {
  const int n = g.vertex_count();
  const auto ged = gallai_edmonds(g);
  const auto comps_c = components_within(g, ged.c);
  const int a_count = static_cast<int>(ged.a.size());
  const int comp_count = static_cast<int>(ged.d_components.size());
  detail::SubgraphCache cache(g);

  std::vector<int> universe(n);
  std::iota(universe.begin(), universe.end(), 0);

  std::optional<DecompositionGapCertificate> found;

  auto try_assignment = [&](const std::vector<int>& isolated, const Matching& m_a) {
    std::vector<char> removed(n, 0);
    for (int v : isolated) removed[v] = 1;
    for (const auto& [p, q] : m_a.edges) removed[p] = removed[q] = 1;
    auto rest_of = [&](const std::vector<int>& component) {
      std::vector<int> rest;
      for (int v : component)
        if (!removed[v]) rest.push_back(v);
      return rest;
    };

    for (const auto& component : comps_c) {
      if (!cache.has_perfect_matching_on(rest_of(component))) return true;
    }

    std::vector<char> in_closed_nb(n, 0);
    for (int v : isolated) {
      in_closed_nb[v] = 1;
      for (int to : g.neighbors(v)) in_closed_nb[to] = 1;
    }

    std::vector<char> can_perfect(comp_count, 0);
    std::vector<int> near_root(comp_count, -1);
    for (int i = 0; i < comp_count; ++i) {
      const auto rest = rest_of(ged.d_components[i]);
      can_perfect[i] = cache.has_perfect_matching_on(rest);
      for (int v : rest) {
        if (in_closed_nb[v]) continue;
        auto shrunk = rest;
        std::erase(shrunk, v);
        if (cache.has_perfect_matching_on(shrunk)) {
          near_root[i] = v;
          break;
        }
      }
      if (!can_perfect[i] && near_root[i] == -1) return true;
    }

    // Feasibility of the attachment system: match all of A into distinct
    // components that can absorb an attachment, covering every component
    // that cannot stand alone. Coverable-together component sets form a
    // transversal matroid, so growing a matching that first covers the
    // mandatory components and then saturates A is exact.
    AttachmentMatcher matcher(ged.attachment_graph, a_count, can_perfect);
    for (int i = 0; i < comp_count; ++i) {
      if (near_root[i] != -1) continue;  // mandatory attachment
      std::vector<char> seen(a_count, 0);
      if (!matcher.augment_from_comp(i, seen)) return true;
    }
    for (int a = 0; a < a_count; ++a) {
      if (matcher.comp_of_a[a] != -1) continue;
      std::vector<char> seen(comp_count, 0);
      if (!matcher.augment_from_a(a, seen)) return true;
    }

    // Materialize the certificate.
    DecompositionGapCertificate cert;
    cert.independent_set = isolated;
    cert.attachment_matching = m_a;
    std::vector<Edge> star_edges;
    std::vector<char> incident(comp_count, 0);
    for (int a = 0; a < a_count; ++a) {
      const int comp = matcher.comp_of_a[a];
      incident[comp] = 1;
      const int vertex_a = ged.a[a];
      int partner = -1;
      for (int to : g.neighbors(vertex_a)) {
        if (ged.component_of[to] == comp) {
          partner = to;
          break;
        }
      }
      star_edges.push_back(make_edge(vertex_a, partner));
    }
    cert.attachment_star = make_matching(std::move(star_edges));

    auto matching_on = [&](const std::vector<int>& verts) {
      auto sub = induced_subgraph(g, verts);
      return map_to_parent(maximum_matching(sub.graph), sub.to_parent);
    };
    for (const auto& component : comps_c) {
      cert.component_matchings.push_back(
          {component, true, matching_on(rest_of(component)), std::nullopt});
    }
    for (int i = 0; i < comp_count; ++i) {
      const auto& component = ged.d_components[i];
      auto rest = rest_of(component);
      if (incident[i]) {
        cert.component_matchings.push_back(
            {component, false, matching_on(rest), std::nullopt});
      } else {
        std::erase(rest, near_root[i]);
        cert.component_matchings.push_back(
            {component, false, matching_on(rest), near_root[i]});
      }
    }
    std::string why;
    if (!verify_gap_certificate(g, k, cert, &why)) {
      throw std::logic_error("decomposition certificate failed verification: " + why);
    }
    found = std::move(cert);
    return false;
  };

  detail::for_each_independent_subset(
      g, universe, 2 * k, [&](const std::vector<int>& isolated) {
        std::vector<char> in_i(n, 0);
        for (int v : isolated) in_i[v] = 1;
        std::vector<int> targets;
        for (int a : ged.a)
          if (!in_i[a]) targets.push_back(a);
        detail::MinimalSaturatorEnum saturators(
            g, targets, isolated,
            [&](const Matching& m_a) { return try_assignment(isolated, m_a); });
        return saturators.run();
      });
  return found;
}

// ---------------------------------------------------------------------------
// Exposure-guided decider.
// ---------------------------------------------------------------------------

std::optional<ExposureGapCertificate> decide_gap_exposure(const Graph& g, int k) {
  const int n = g.vertex_count();
  const Matching m_star = maximum_matching(g);
  const std::vector<int> saturated = m_star.covered_vertices();
  const std::vector<int> exposed = m_star.exposed_vertices(g);
  detail::SubgraphCache cache(g);

  std::vector<int> universe(n);
  std::iota(universe.begin(), universe.end(), 0);

  std::optional<ExposureGapCertificate> found;
  detail::for_each_independent_subset(
      g, saturated, 2 * k, [&](const std::vector<int>& isolated) {
        std::vector<char> near_i(n, 0), in_i(n, 0);
        for (int v : isolated) {
          in_i[v] = 1;
          near_i[v] = 1;
          for (int to : g.neighbors(v)) near_i[to] = 1;
        }
        std::vector<int> touched, untouched;
        for (int v : exposed) (near_i[v] && !in_i[v] ? touched : untouched).push_back(v);
        // Exposed vertices inside I would make I non-independent with the
        // saturated universe; exposed and saturated are disjoint anyway.
        std::vector<char> in_touched(n, 0), in_untouched(n, 0);
        for (int v : touched) in_touched[v] = 1;
        for (int v : untouched) in_untouched[v] = 1;

        std::vector<int> candidates;
        for (int z : saturated) {
          if (near_i[z]) continue;
          int touched_neighbors = 0;
          bool sees_untouched = false;
          for (int to : g.neighbors(z)) {
            if (in_touched[to]) ++touched_neighbors;
            if (in_untouched[to]) sees_untouched = true;
          }
          if (touched_neighbors <= 1 && !sees_untouched) candidates.push_back(z);
        }

        const int swap_size = static_cast<int>(touched.size());
        detail::for_each_independent_subset(
            g, candidates, swap_size, [&](const std::vector<int>& swap) {
              std::vector<char> removed(n, 0);
              for (int v : isolated) removed[v] = 1;
              for (int v : swap) removed[v] = 1;
              for (int v : untouched) removed[v] = 1;
              std::vector<int> kept;
              for (int v = 0; v < n; ++v)
                if (!removed[v]) kept.push_back(v);
              if (!cache.has_perfect_matching_on(kept)) return true;
              auto sub = induced_subgraph(g, kept);
              ExposureGapCertificate cert;
              cert.maximum = m_star;
              cert.independent_set = isolated;
              cert.swap_set = swap;
              cert.touched = touched;
              cert.untouched = untouched;
              cert.h_matching =
                  map_to_parent(maximum_matching(sub.graph), sub.to_parent);
              std::string why;
              if (!verify_gap_certificate(g, k, cert, &why)) {
                throw std::logic_error(
                    "exposure certificate failed verification: " + why);
              }
              found = std::move(cert);
              return false;
            });
        return !found.has_value();
      });
  return found;
}

// ---------------------------------------------------------------------------
// Certificate verification.
// ---------------------------------------------------------------------------

namespace {

bool fail(std::string* why, const std::string& message) {
  if (why) *why = message;
  return false;
}

bool is_independent_set(const Graph& g, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

}  // namespace

bool verify_gap_certificate(const Graph& g, int k,
                            const DecompositionGapCertificate& cert,
                            std::string* why) {
  const auto ged = gallai_edmonds(g);
  const int nu = matching_number(g);
  const auto& isolated = cert.independent_set;
  if (static_cast<int>(isolated.size()) != 2 * k)
    return fail(why, "independent set does not have 2k vertices");
  if (!is_independent_set(g, isolated))
    return fail(why, "exposed set is not independent");

  std::vector<char> in_i(g.vertex_count(), 0);
  for (int v : isolated) in_i[v] = 1;

  const auto& m_a = cert.attachment_matching;
  if (!is_valid_matching(g, m_a)) return fail(why, "attachment matching invalid");
  std::vector<char> in_a(g.vertex_count(), 0);
  for (int a : ged.a) in_a[a] = 1;
  std::vector<char> a_saturated(g.vertex_count(), 0);
  for (const auto& [p, q] : m_a.edges) {
    if (in_i[p] || in_i[q])
      return fail(why, "attachment matching touches the exposed set");
    const bool p_target = in_a[p] && !in_i[p];
    const bool q_target = in_a[q] && !in_i[q];
    if (!p_target && !q_target)
      return fail(why, "attachment matching has a redundant edge");
    a_saturated[p] = a_saturated[q] = 1;
  }
  for (int a : ged.a)
    if (!in_i[a] && !a_saturated[a])
      return fail(why, "attachment matching misses a vertex of A");

  const auto& star = cert.attachment_star;
  if (!is_valid_matching(g, star)) return fail(why, "attachment system invalid");
  if (star.size() != static_cast<int>(ged.a.size()))
    return fail(why, "attachment system does not have |A| edges");
  std::vector<char> a_used(g.vertex_count(), 0);
  std::vector<char> comp_used(ged.d_components.size(), 0);
  for (const auto& [p, q] : star.edges) {
    const int a = in_a[p] ? p : q;
    const int d = in_a[p] ? q : p;
    if (!in_a[a] || ged.component_of[d] < 0)
      return fail(why, "attachment system edge does not join A to D");
    if (a_used[a]) return fail(why, "attachment system repeats an A vertex");
    a_used[a] = 1;
    const int comp = ged.component_of[d];
    if (comp_used[comp]) return fail(why, "attachment system repeats a component");
    comp_used[comp] = 1;
  }

  std::vector<char> removed(g.vertex_count(), 0);
  for (int v : isolated) removed[v] = 1;
  for (const auto& [p, q] : m_a.edges) removed[p] = removed[q] = 1;
  std::vector<char> in_closed_nb(g.vertex_count(), 0);
  for (int v : isolated) {
    in_closed_nb[v] = 1;
    for (int to : g.neighbors(v)) in_closed_nb[to] = 1;
  }

  auto comps_c = components_within(g, ged.c);
  std::vector<std::vector<int>> expected;
  expected.insert(expected.end(), comps_c.begin(), comps_c.end());
  expected.insert(expected.end(), ged.d_components.begin(), ged.d_components.end());
  if (cert.component_matchings.size() != expected.size())
    return fail(why, "wrong number of component matchings");
  std::vector<char> seen_component(expected.size(), 0);

  for (const auto& part : cert.component_matchings) {
    auto slot = std::find(expected.begin(), expected.end(), part.component);
    if (slot == expected.end())
      return fail(why, "unknown component in certificate");
    const auto pos = std::distance(expected.begin(), slot);
    if (seen_component[pos]) return fail(why, "component listed twice");
    seen_component[pos] = 1;
    std::vector<int> rest;
    for (int v : part.component)
      if (!removed[v]) rest.push_back(v);
    const bool is_d = !part.component.empty() &&
                      ged.component_of[part.component.front()] >= 0;
    if (part.in_c == is_d) return fail(why, "component mislabeled");
    bool needs_perfect = true;
    if (is_d) {
      const int comp = ged.component_of[part.component.front()];
      needs_perfect = comp_used[comp] != 0;
      if (!needs_perfect) {
        if (!part.exposed_root) return fail(why, "missing exposed root");
        const int root = *part.exposed_root;
        if (std::find(rest.begin(), rest.end(), root) == rest.end())
          return fail(why, "exposed root outside its component remainder");
        if (in_closed_nb[root])
          return fail(why, "exposed root adjacent to the exposed set");
        std::erase(rest, root);
      }
    }
    if (needs_perfect && part.exposed_root)
      return fail(why, "unexpected exposed root");
    if (!is_valid_matching(g, part.matching))
      return fail(why, "component matching invalid");
    auto covered = part.matching.covered_vertices();
    if (covered != rest)
      return fail(why, "component matching does not cover the right vertices");
  }

  const Matching whole = cert.reassembled();
  if (!is_valid_matching(g, whole)) return fail(why, "reassembly is not a matching");
  if (whole.size() != nu - k)
    return fail(why, "reassembled matching does not have nu - k edges");
  if (!is_maximal_matching(g, whole))
    return fail(why, "reassembled matching is not maximal");
  return true;
}

bool verify_gap_certificate(const Graph& g, int k,
                            const ExposureGapCertificate& cert, std::string* why) {
  const int nu = matching_number(g);
  if (!is_valid_matching(g, cert.maximum) || cert.maximum.size() != nu)
    return fail(why, "stored matching is not maximum");
  const auto& isolated = cert.independent_set;
  if (static_cast<int>(isolated.size()) != 2 * k)
    return fail(why, "independent set does not have 2k vertices");

  std::vector<char> saturated(g.vertex_count(), 0);
  for (const auto& [p, q] : cert.maximum.edges) saturated[p] = saturated[q] = 1;
  for (int v : isolated)
    if (!saturated[v]) return fail(why, "exposed set leaves the saturated part");
  for (int z : cert.swap_set)
    if (!saturated[z]) return fail(why, "swap set leaves the saturated part");

  std::vector<char> near_i(g.vertex_count(), 0), in_i(g.vertex_count(), 0);
  for (int v : isolated) {
    in_i[v] = 1;
    near_i[v] = 1;
    for (int to : g.neighbors(v)) near_i[to] = 1;
  }
  for (int z : cert.swap_set)
    if (in_i[z]) return fail(why, "swap set intersects the exposed set");

  std::vector<int> touched, untouched;
  for (int v : cert.maximum.exposed_vertices(g))
    (near_i[v] && !in_i[v] ? touched : untouched).push_back(v);
  if (touched != cert.touched || untouched != cert.untouched)
    return fail(why, "stored exposed partition is inconsistent");
  if (cert.swap_set.size() != cert.touched.size())
    return fail(why, "swap set size mismatch");

  std::vector<char> in_touched(g.vertex_count(), 0);
  for (int v : touched) in_touched[v] = 1;
  for (int z : cert.swap_set) {
    int count = 0;
    for (int to : g.neighbors(z))
      if (in_touched[to]) ++count;
    if (count > 1) return fail(why, "swap vertex sees two touched vertices");
  }

  std::vector<int> exposed_union = isolated;
  exposed_union.insert(exposed_union.end(), cert.swap_set.begin(),
                       cert.swap_set.end());
  exposed_union.insert(exposed_union.end(), untouched.begin(), untouched.end());
  std::sort(exposed_union.begin(), exposed_union.end());
  if (std::adjacent_find(exposed_union.begin(), exposed_union.end()) !=
      exposed_union.end())
    return fail(why, "exposed union has repeats");
  if (!is_independent_set(g, exposed_union))
    return fail(why, "exposed union is not independent");

  if (!is_valid_matching(g, cert.h_matching))
    return fail(why, "residual matching invalid");
  auto covered = cert.h_matching.covered_vertices();
  std::vector<int> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  if (covered != set_difference_sorted(all, exposed_union))
    return fail(why, "residual matching is not perfect on the remainder");
  if (cert.h_matching.size() != nu - k)
    return fail(why, "residual matching does not have nu - k edges");
  if (!is_maximal_matching(g, cert.h_matching))
    return fail(why, "residual matching is not maximal");
  return true;
}

int compute_matching_gap(const Graph& g, GapDecider decider) {
  if (is_equimatchable(g)) return 0;
  if (decider == GapDecider::Brute) {
    return matching_number(g) - minimum_maximal_matching(g).second;
  }
  auto at_least = [&](int k) {
    switch (decider) {
      case GapDecider::IndependentSetEnum:
        return decide_gap_is_enum(g, k).has_value();
      case GapDecider::Decomposition:
        return decide_gap_decomposition(g, k).has_value();
      default:
        return decide_gap_exposure(g, k).has_value();
    }
  };
  int gap = 1;
  assert(at_least(1));
  while (at_least(gap + 1)) ++gap;
  return gap;
}

// ---------------------------------------------------------------------------
// Witnesses for the unit-gap characterization.
// ---------------------------------------------------------------------------

namespace {

// Globally shortest augmenting path for `m`, as a vertex sequence. Iterative
// deepening over exact odd edge counts; within one depth the first path in
// lexicographic order wins. Exponential in the worst case, desk scale.
std::vector<int> shortest_augmenting_path(const Graph& g, const Matching& m) {
  const int n = g.vertex_count();
  std::vector<int> mate(n, -1);
  for (const auto& [u, v] : m.edges) {
    mate[u] = v;
    mate[v] = u;
  }
  std::vector<int> path;
  std::vector<char> visited(n, 0);

  std::function<bool(int, int, int)> extend = [&](int cur, int done, int goal) {
    if (done == goal) return mate[cur] == -1;
    if (done % 2 == 1) {  // matched edge is forced
      const int next = mate[cur];
      if (next == -1 || visited[next]) return false;
      visited[next] = 1;
      path.push_back(next);
      if (extend(next, done + 1, goal)) return true;
      path.pop_back();
      visited[next] = 0;
      return false;
    }
    for (int to : g.neighbors(cur)) {
      if (visited[to] || mate[cur] == to) continue;
      visited[to] = 1;
      path.push_back(to);
      if (extend(to, done + 1, goal)) return true;
      path.pop_back();
      visited[to] = 0;
    }
    return false;
  };

  for (int goal = 1; goal < n; goal += 2) {
    for (int start = 0; start < n; ++start) {
      if (mate[start] != -1) continue;
      path.assign(1, start);
      std::fill(visited.begin(), visited.end(), 0);
      visited[start] = 1;
      if (extend(start, 0, goal)) return path;
    }
  }
  throw std::logic_error("no augmenting path below a maximum matching");
}

}  // namespace

std::optional<AugmentingP4Witness> find_augmenting_p4_witness(const Graph& g,
                                                              int k) {
  if (k >= matching_number(g)) return std::nullopt;
  auto base = maximal_matching_of_size(g, k);
  if (!base) return std::nullopt;

  const auto path = shortest_augmenting_path(g, *base);
  Matching shifted = *base;
  if (path.size() > 4) {
    // Slide the matched edges one step toward the far end; the near end then
    // carries an augmenting path on the first four vertices.
    std::vector<Edge> edges = shifted.edges;
    for (size_t i = 3; i + 1 < path.size() - 1; i += 2) {
      edges.erase(std::find(edges.begin(), edges.end(),
                            make_edge(path[i], path[i + 1])));
    }
    for (size_t i = 4; i + 1 < path.size(); i += 2) {
      edges.push_back(make_edge(path[i], path[i + 1]));
    }
    shifted = make_matching(std::move(edges));
  }
  if (!is_maximal_matching(g, shifted) || shifted.size() != k) {
    throw std::logic_error("shift along a shortest augmenting path went wrong");
  }
  return AugmentingP4Witness{std::move(shifted),
                             {path[0], path[1], path[2], path[3]}};
}

bool is_almost_equimatchable(const Graph& g, GapDecider decider) {
  return compute_matching_gap(g, decider) == 1;
}

bool is_almost_equimatchable_exhaustive(const Graph& g) {
  bool any = false;
  int common_size = -1;
  bool consistent = true;
  for_each_maximal_matching(g, [&](const Matching& m) {
    if (augmenting_p4_paths(g, m).empty()) return true;
    if (!any) {
      any = true;
      common_size = m.size();
      return true;
    }
    if (m.size() != common_size) {
      consistent = false;
      return false;
    }
    return true;
  });
  return any && consistent;
}

}  // namespace equimatch
