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

#include <doctest.h>

#include <set>

#include "support/oracles.hpp"

using namespace equimatch;

namespace {

std::vector<int> oracle_d_set(const Graph& g) {
  std::vector<int> d;
  const int nu = oracle::nu(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (oracle::nu(delete_vertices(g, {v}).graph) == nu) d.push_back(v);
  }
  return d;
}

}  // namespace

TEST_CASE("decomposition of small named graphs") {
  const auto p3 = gallai_edmonds(path_graph(3));
  CHECK(p3.d == std::vector<int>{0, 2});
  CHECK(p3.a == std::vector<int>{1});
  CHECK(p3.c.empty());
  CHECK(p3.rho == 2);

  const auto c7 = gallai_edmonds(cycle_graph(7));
  CHECK(c7.d == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(c7.a.empty());
  CHECK(c7.d_components.size() == 1);
  CHECK(c7.rho == 1);

  const auto c6 = gallai_edmonds(cycle_graph(6));
  CHECK(c6.d.empty());
  CHECK(c6.a.empty());
  CHECK(c6.c == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(c6.rho == 1);

  const auto star = gallai_edmonds(star_graph(3));
  CHECK(star.d == std::vector<int>{1, 2, 3});
  CHECK(star.a == std::vector<int>{0});
  CHECK(star.rho == 3);
  CHECK(rho(star_graph(3)) == 3);
}

TEST_CASE("factor-critical recognition") {
  CHECK(is_factor_critical(cycle_graph(5)));
  CHECK(is_factor_critical(complete_graph(7)));
  CHECK(is_factor_critical(complete_graph(1)));
  CHECK_FALSE(is_factor_critical(path_graph(3)));
  CHECK_FALSE(is_factor_critical(complete_graph(4)));
  CHECK_FALSE(is_factor_critical(Graph(3, {})));
}

TEST_CASE("deletion criterion matches the avoidable-vertex definition") {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    const Graph g = oracle::random_graph(2 + seed % 11, 15 + (seed * 13) % 70, seed);
    CHECK(gallai_edmonds(g).d == oracle_d_set(g));
  }
}

TEST_CASE("structure of the decomposition on random graphs") {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const Graph g = oracle::random_graph(3 + seed % 10, 20 + (seed * 17) % 60, seed);
    const auto ged = gallai_edmonds(g);

    // Partition.
    std::vector<int> merged;
    merged.insert(merged.end(), ged.d.begin(), ged.d.end());
    merged.insert(merged.end(), ged.a.begin(), ged.a.end());
    merged.insert(merged.end(), ged.c.begin(), ged.c.end());
    std::sort(merged.begin(), merged.end());
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    CHECK(merged == all);

    for (const auto& component : ged.d_components)
      CHECK(is_factor_critical(induced_subgraph(g, component).graph));
    CHECK(has_perfect_matching(induced_subgraph(g, ged.c).graph));

    // No edge of the attachment graph joins two A vertices.
    const int a_count = static_cast<int>(ged.a.size());
    for (const auto& [u, v] : ged.attachment_graph.edges())
      CHECK((u < a_count) != (v < a_count));

    // Every maximum matching pairs A with distinct components, restricts to
    // a perfect matching on C, and exposes one vertex in all but |A| of the
    // D-components.
    const int nu = matching_number(g);
    int inspected = 0;
    for_each_maximal_matching(g, [&](const Matching& m) {
      if (m.size() != nu) return true;
      std::set<int> partner_components;
      for (int a : ged.a) {
        const auto mate = m.mate(a);
        REQUIRE(mate.has_value());
        const int component = ged.component_of[*mate];
        CHECK(component >= 0);
        CHECK(partner_components.insert(component).second);
      }
      for (int c : ged.c) {
        const auto mate = m.mate(c);
        REQUIRE(mate.has_value());
        CHECK(std::binary_search(ged.c.begin(), ged.c.end(), *mate));
      }
      std::vector<int> exposed_per_component(ged.d_components.size(), 0);
      for (int v : m.exposed_vertices(g)) {
        REQUIRE(ged.component_of[v] >= 0);
        ++exposed_per_component[ged.component_of[v]];
      }
      for (int count : exposed_per_component) CHECK(count <= 1);
      CHECK(static_cast<int>(m.exposed_vertices(g).size()) ==
            static_cast<int>(ged.d_components.size()) - a_count);
      return ++inspected < 64;
    });
  }
}
