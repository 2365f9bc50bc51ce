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

// End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
// exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "equimatch/equimatchable_sets.hpp"
#include "equimatch/gadgets.hpp"
#include "equimatch/gallai_edmonds.hpp"
#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"
#include "equimatch/matching_gap.hpp"
#include "support/oracles.hpp"

using namespace equimatch;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail << what;
    }
  }
};

// --------------------------------------------------------------------------
// 1. The ten-vertex fixture: numbers, unique minimum, four-way decider
//    agreement for k = 0..5, and no two vertex-disjoint augmenting paths.
// --------------------------------------------------------------------------
bool criterion_fixture(std::string& detail) {
  Check check;
  const Graph g = gap_two_fixture();
  const int nu = matching_number(g);
  const auto [minimum, beta] = minimum_maximal_matching(g);
  check.require(nu == 5, "nu != 5");
  check.require(beta == 3, "beta != 3");
  check.require(nu - beta == 2, "mu != 2");
  check.require(minimum.edges == std::vector<Edge>{{1, 2}, {3, 8}, {5, 6}},
                "wrong minimum maximal matching");

  int count_minimum = 0;
  for_each_maximal_matching(g, [&](const Matching& m) {
    if (m.size() == 3) ++count_minimum;
    return true;
  });
  check.require(count_minimum == 1, "minimum maximal matching not unique");

  for (int k = 0; k <= 5; ++k) {
    const bool expected = nu - beta >= k;
    check.require(gap_at_least_brute(g, k) == expected, "brute disagrees");
    check.require(decide_gap_is_enum(g, k).has_value() == expected,
                  "is-enum disagrees at k=" + std::to_string(k));
    check.require(decide_gap_decomposition(g, k).has_value() == expected,
                  "alg1 disagrees at k=" + std::to_string(k));
    check.require(decide_gap_exposure(g, k).has_value() == expected,
                  "alg2 disagrees at k=" + std::to_string(k));
  }

  bool disjoint_pair = false;
  for_each_maximal_matching(g, [&](const Matching& m) {
    const auto paths = augmenting_p4_paths(g, m);
    for (size_t i = 0; i < paths.size(); ++i) {
      for (size_t j = i + 1; j < paths.size(); ++j) {
        bool disjoint = true;
        for (int a : paths[i])
          for (int b : paths[j])
            if (a == b) disjoint = false;
        if (disjoint) disjoint_pair = true;
      }
    }
    return !disjoint_pair;
  });
  check.require(!disjoint_pair, "found two vertex-disjoint augmenting paths");

  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 2. Cycle defect closed form against both oracles for n = 3..16.
// --------------------------------------------------------------------------
bool criterion_cycles(std::string& detail) {
  Check check;
  for (int n = 3; n <= 16; ++n) {
    const Graph cycle = cycle_graph(n);
    const int expected = eta_cycle_closed_form(n);
    const int by_subsets = eta_by_subset_search(cycle).eta;
    const int by_hitting = eta_by_hitting_set(cycle).eta;
    check.require(by_subsets == expected,
                  "subset search off at n=" + std::to_string(n) + " (got " +
                      std::to_string(by_subsets) + ", want " +
                      std::to_string(expected) + ")");
    check.require(by_hitting == expected,
                  "hitting set off at n=" + std::to_string(n));
  }
  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 3. Four-way decider agreement with verified certificates on 510 random
//    graphs, n <= 12, mixed densities, every k in [0, n/2].
// --------------------------------------------------------------------------
bool criterion_cross_validation(std::string& detail) {
  Check check;
  const auto pool = oracle::random_pool(510, 4, 12, 1000);
  int yes_certificates = 0;
  for (size_t i = 0; i < pool.size() && check.ok; ++i) {
    const Graph& g = pool[i];
    const int nu = matching_number(g);
    const int beta = minimum_maximal_matching(g).second;
    for (int k = 0; k <= g.vertex_count() / 2 && check.ok; ++k) {
      const bool expected = nu - beta >= k;
      const std::string tag =
          " (graph " + std::to_string(i) + ", k=" + std::to_string(k) + ")";
      check.require(gap_at_least_brute(g, k) == expected, "brute" + tag);
      if (expected) {
        // The brute verdict must be witnessed by an actual maximal matching.
        const auto witness = maximal_matching_of_size(g, nu - k);
        check.require(witness.has_value() && witness->size() == nu - k,
                      "missing witness" + tag);
      }

      const auto by_is = decide_gap_is_enum(g, k);
      check.require(by_is.has_value() == expected, "is-enum" + tag);
      if (by_is) {
        check.require(by_is->size() == nu - k && is_maximal_matching(g, *by_is),
                      "is-enum witness" + tag);
        ++yes_certificates;
      }

      const auto by_decomposition = decide_gap_decomposition(g, k);
      check.require(by_decomposition.has_value() == expected, "alg1" + tag);
      if (by_decomposition) {
        std::string why;
        const bool good = verify_gap_certificate(g, k, *by_decomposition, &why);
        check.require(good && by_decomposition->reassembled().size() == nu - k,
                      "alg1 certificate" + tag + ": " + why);
        ++yes_certificates;
      }

      const auto by_exposure = decide_gap_exposure(g, k);
      check.require(by_exposure.has_value() == expected, "alg2" + tag);
      if (by_exposure) {
        std::string why;
        const bool good = verify_gap_certificate(g, k, *by_exposure, &why);
        check.require(good && by_exposure->h_matching.size() == nu - k,
                      "alg2 certificate" + tag + ": " + why);
        ++yes_certificates;
      }
    }
  }
  if (check.ok) {
    check.detail << pool.size() << " graphs, " << yes_certificates
                 << " verified certificates";
  }
  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 4. Amplifier identity: the gap of the amplified graph equals the
//    independence number, over every graph with up to 4 vertices plus random
//    graphs on 5..6 vertices (> 200 total).
// --------------------------------------------------------------------------
bool criterion_amplifier(std::string& detail) {
  Check check;
  std::vector<Graph> pool;
  for (int n = 1; n <= 4; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (size_t b = 0; b < pairs.size(); ++b)
        if (mask & (1u << b)) edges.push_back(pairs[b]);
      pool.emplace_back(n, std::move(edges));
    }
  }
  for (unsigned seed = 0; seed < 130; ++seed) {
    pool.push_back(oracle::random_graph(5 + seed % 2, 15 + (seed * 7) % 75, 4000 + seed));
  }
  check.require(pool.size() >= 200, "pool too small");
  for (size_t i = 0; i < pool.size() && check.ok; ++i) {
    const Graph amplified = make_gap_amplifier(pool[i]);
    const int gap = compute_matching_gap(amplified, GapDecider::IndependentSetEnum);
    check.require(gap == oracle::alpha(pool[i]),
                  "identity fails on pool graph " + std::to_string(i));
  }
  if (check.ok) check.detail << pool.size() << " graphs";
  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 5. Bounds on random graphs, with both tight families.
// --------------------------------------------------------------------------
bool criterion_bounds(std::string& detail) {
  Check check;
  const auto pool = oracle::random_pool(200, 4, 12, 7000);
  for (size_t i = 0; i < pool.size() && check.ok; ++i) {
    const auto report = check_bounds(pool[i]);
    check.require(report.holds, "bounds fail on pool graph " + std::to_string(i));
  }
  for (int k = 1; k <= 4 && check.ok; ++k) {
    const Graph family = make_kp4(k);
    const int mu = matching_number(family) - minimum_maximal_matching(family).second;
    const int eta = eta_by_hitting_set(family).eta;
    check.require(mu == k && eta == k,
                  "disjoint-paths family not tight at k=" + std::to_string(k));
  }
  for (int k = 2; k <= 3 && check.ok; ++k) {
    const Graph prism = make_prism(k);
    const int eta = eta_expandable_shortcut(prism).eta;
    check.require(eta == 2 * matching_number(prism) - 2,
                  "prism not tight at k=" + std::to_string(k));
  }
  // Small prism: the exhaustive oracle agrees with the shortcut.
  check.require(eta_by_hitting_set(make_prism(2)).eta == 8,
                "prism k=2 hitting-set mismatch");
  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 6. Expandable shortcut hypotheses and values on prisms and on the
//    subdivision complements of the two cubic staples.
// --------------------------------------------------------------------------
bool criterion_shortcut(std::string& detail) {
  Check check;
  auto examine = [&](const Graph& g, int expected_eta, const std::string& name) {
    check.require(is_expandable(g), name + " not expandable");
    check.require(has_perfect_matching(g), name + " has no perfect matching");
    if (!check.ok) return;
    const int eta = eta_expandable_shortcut(g).eta;
    const int via_omega = g.vertex_count() - clique_number(g);
    const int via_cover = vertex_cover_number(complement(g));
    check.require(eta == via_omega, name + ": eta != n - omega");
    check.require(eta == via_cover, name + ": eta != cover of complement");
    check.require(eta == expected_eta, name + ": eta != " +
                                           std::to_string(expected_eta) + " (got " +
                                           std::to_string(eta) + ")");
  };
  examine(make_prism(2), 8, "prism k=2");
  examine(make_prism(3), 12, "prism k=3");

  const Graph k4 = complete_graph(4);
  examine(make_subdivision_complement(k4), vertex_cover_number(k4) + 6,
          "subdivision complement of K4");
  const Graph k33 = complete_bipartite_graph(3, 3);
  examine(make_subdivision_complement(k33), vertex_cover_number(k33) + 9,
          "subdivision complement of K3,3");
  check.require(vertex_cover_number(k4) + 6 == 9, "K4 target is 9");
  check.require(vertex_cover_number(k33) + 9 == 12, "K3,3 target is 12");
  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 7. Hitting-set formulation: small sets are equimatchable exactly when they
//    hit the exposure hypergraph, and the two defect oracles agree.
// --------------------------------------------------------------------------
bool criterion_hitting_set(std::string& detail) {
  Check check;
  const auto pool = oracle::random_pool(80, 3, 10, 9000);
  for (size_t i = 0; i < pool.size() && check.ok; ++i) {
    const Graph& g = pool[i];
    const auto exp2 = build_exp2(g);
    const int n = g.vertex_count();
    std::vector<char> in_edge(n, 0);
    auto hits_all = [&](const std::vector<int>& s) {
      for (const auto& hyperedge : exp2.hyperedges) {
        bool hit = false;
        for (int v : hyperedge)
          for (int w : s)
            if (v == w) hit = true;
        if (!hit) return false;
      }
      return true;
    };
    std::vector<std::vector<int>> smalls{{}};
    for (int a = 0; a < n; ++a) {
      smalls.push_back({a});
      for (int b = a + 1; b < n; ++b) {
        smalls.push_back({a, b});
        for (int c = b + 1; c < n; ++c) smalls.push_back({a, b, c});
      }
    }
    for (const auto& s : smalls) {
      const bool equimatchable_set =
          check_equimatchable_set(g, s).verdict != SetVerdict::NotEquimatchable;
      if (equimatchable_set != hits_all(s)) {
        check.require(false, "equivalence fails on pool graph " +
                                 std::to_string(i));
        break;
      }
    }
    check.require(eta_by_hitting_set(g).eta == eta_by_subset_search(g).eta,
                  "defect oracles disagree on pool graph " + std::to_string(i));
  }
  if (check.ok) check.detail << pool.size() << " graphs, all subsets up to size 3";
  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 8. Decomposition structure on random graphs.
// --------------------------------------------------------------------------
bool criterion_decomposition(std::string& detail) {
  Check check;
  const auto pool = oracle::random_pool(200, 3, 12, 11000);
  for (size_t i = 0; i < pool.size() && check.ok; ++i) {
    const Graph& g = pool[i];
    const std::string tag = " on pool graph " + std::to_string(i);
    const auto ged = gallai_edmonds(g);
    const int nu = matching_number(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const bool avoidable =
          matching_number(delete_vertices(g, {v}).graph) == nu;
      const bool in_d = std::binary_search(ged.d.begin(), ged.d.end(), v);
      check.require(avoidable == in_d, "deletion criterion" + tag);
    }
    for (const auto& component : ged.d_components) {
      check.require(is_factor_critical(induced_subgraph(g, component).graph),
                    "component not factor-critical" + tag);
    }
    check.require(has_perfect_matching(induced_subgraph(g, ged.c).graph),
                  "no perfect matching on C" + tag);
    int sampled = 0;
    for_each_maximal_matching(g, [&](const Matching& m) {
      if (m.size() != nu) return true;
      std::vector<char> used_component(ged.d_components.size(), 0);
      for (int a : ged.a) {
        const auto mate = m.mate(a);
        if (!mate || ged.component_of[*mate] < 0) {
          check.require(false, "A vertex not matched into D" + tag);
          return false;
        }
        int& flag_slot = reinterpret_cast<int&>(used_component[ged.component_of[*mate]]);
        (void)flag_slot;
        if (used_component[ged.component_of[*mate]]) {
          check.require(false, "two A vertices share a component" + tag);
          return false;
        }
        used_component[ged.component_of[*mate]] = 1;
      }
      return ++sampled < 50;
    });
  }
  if (check.ok) check.detail << pool.size() << " graphs";
  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 9. The polynomial recognizer against enumeration, plus the named families.
// --------------------------------------------------------------------------
bool criterion_recognizer(std::string& detail) {
  Check check;
  const auto pool = oracle::random_pool(150, 2, 10, 13000);
  for (size_t i = 0; i < pool.size() && check.ok; ++i) {
    const Graph& g = pool[i];
    int low = -1, high = -1;
    for_each_maximal_matching(g, [&](const Matching& m) {
      if (low == -1 || m.size() < low) low = m.size();
      if (m.size() > high) high = m.size();
      return true;
    });
    check.require(is_equimatchable(g) == (low == high),
                  "recognizer wrong on pool graph " + std::to_string(i));
  }
  for (int n : {3, 4, 5, 7}) {
    check.require(is_equimatchable(cycle_graph(n)),
                  "cycle " + std::to_string(n) + " misclassified");
  }
  for (int n = 1; n <= 8; ++n) {
    check.require(is_equimatchable(complete_graph(n)),
                  "complete graph " + std::to_string(n) + " misclassified");
  }
  check.require(!is_equimatchable(cycle_graph(6)), "six-cycle misclassified");
  check.require(!is_equimatchable(path_graph(4)), "four-path misclassified");
  detail = check.detail.str();
  return check.ok;
}

// --------------------------------------------------------------------------
// 10. Separation family: large defect, unit gap, exposure hypergraph equal
//     to the removed perfect matching.
// --------------------------------------------------------------------------
bool criterion_separation(std::string& detail) {
  Check check;
  for (int k = 3; k <= 6; ++k) {
    const Graph g = complement(disjoint_edges_graph(k));
    const std::string tag = " at k=" + std::to_string(k);
    check.require(eta_by_hitting_set(g).eta == k, "defect" + tag);
    check.require(compute_matching_gap(g, GapDecider::IndependentSetEnum) <= 1,
                  "gap" + tag);
    std::vector<std::vector<int>> expected;
    for (int i = 0; i < k; ++i) expected.push_back({2 * i, 2 * i + 1});
    check.require(build_exp2(g).hyperedges == expected, "hypergraph" + tag);
  }
  detail = check.detail.str();
  return check.ok;
}

struct Criterion {
  int id;
  const char* label;
  std::function<bool(std::string&)> run;
  double seconds_limit;  // 0 means no stated limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fixture numbers, unique minimum, decider agreement, no disjoint pair",
       criterion_fixture, 1.0},
      {2, "cycle defect closed form, n = 3..16", criterion_cycles, 120.0},
      {3, "decider cross-validation on 510 random graphs", criterion_cross_validation,
       600.0},
      {4, "amplifier identity over 205 small graphs", criterion_amplifier, 0.0},
      {5, "two-sided bounds with tight families", criterion_bounds, 0.0},
      {6, "expandable shortcut on prisms and subdivision complements",
       criterion_shortcut, 120.0},
      {7, "hitting-set formulation and defect oracle agreement",
       criterion_hitting_set, 0.0},
      {8, "decomposition structure on 200 random graphs", criterion_decomposition,
       0.0},
      {9, "equimatchability recognizer vs enumeration plus families",
       criterion_recognizer, 0.0},
      {10, "separation family: defect k, gap at most 1, hypergraph identity",
       criterion_separation, 0.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& error) {
      detail = std::string("exception: ") + error.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criterion.seconds_limit > 0 && seconds > criterion.seconds_limit) {
      ok = false;
      detail = "over time limit of " + std::to_string(criterion.seconds_limit) + "s";
    }
    if (!ok) ++failures;
    std::printf("[%2d] %s  (%6.2fs)  %s%s%s\n", criterion.id,
                ok ? "PASS" : "FAIL", seconds, criterion.label,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              criteria.size() - failures, criteria.size());
  return failures;
}
