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

#ifndef EQUIMATCH_EQUIMATCHABLE_SETS_H_
#define EQUIMATCH_EQUIMATCHABLE_SETS_H_

#include <optional>
#include <utility>
#include <vector>

#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"

namespace equimatch {

// A vertex set S is equimatchable when all maximal matchings covering S share
// one size; sets no matching covers are vacuously equimatchable. The defect
// eta is the smallest size of an equimatchable set and vanishes exactly on
// equimatchable graphs.

enum class SetVerdict { Equimatchable, NotEquimatchable, Vacuous };

struct EquimatchableSetReport {
  std::vector<int> set;
  SetVerdict verdict = SetVerdict::Equimatchable;
  /// Two maximal matchings covering the set with different sizes, present
  /// exactly when the verdict is NotEquimatchable (smaller first).
  std::optional<std::pair<Matching, Matching>> counterexample;
};

/// Classifies one set. Runs over the inclusion-minimal matchings covering S
/// (at most |S| edges each): S is equimatchable iff every such matching M
/// leaves an equimatchable graph behind on the exposed vertices and the
/// values |M| + nu(exposed part) agree across all M. Polynomial for fixed
/// |S|. Throws on out-of-range vertices.
EquimatchableSetReport check_equimatchable_set(const Graph& g, std::vector<int> s);

struct EtaResult {
  int eta = 0;
  std::vector<int> witness;  // a minimum equimatchable set
};

/// Defect by growing subset search: smallest k whose lexicographically first
/// equimatchable k-set exists. Desk scale.
EtaResult eta_by_subset_search(const Graph& g);

/// The exposure hypergraph of second-best maximal matchings (size nu - 1).
/// Every hyperedge has n - 2 nu + 2 vertices and is independent; a set is
/// equimatchable iff it hits every hyperedge.
struct Exp2Hypergraph {
  int vertex_count = 0;
  int uniformity = 0;                        // n - 2 nu + 2
  std::vector<std::vector<int>> hyperedges;  // sorted, deduplicated
};

Exp2Hypergraph build_exp2(const Graph& g);

/// Exact minimum hitting set, by depth-bounded branching on the first unhit
/// hyperedge under a greedy upper bound.
std::vector<int> minimum_hitting_set(const std::vector<std::vector<int>>& hyperedges);

/// Defect as the minimum hitting set of the exposure hypergraph. Desk scale.
EtaResult eta_by_hitting_set(const Graph& g);

/// True iff deleting any two non-adjacent vertices leaves a perfect matching.
/// Vacuously true for complete graphs.
bool is_expandable(const Graph& g);

/// For expandable graphs with a perfect matching the defect collapses to
/// n - omega, with the complement of a maximum clique as witness. Throws
/// std::invalid_argument naming the failed hypothesis otherwise.
EtaResult eta_expandable_shortcut(const Graph& g);

/// Closed form for cycles: 0 for lengths 3, 4, 5, 7; n/2 for even n >= 6;
/// (n-3)/2 for odd n >= 9. Throws for n < 3.
int eta_cycle_closed_form(int n);

struct BoundsReport {
  int nu = 0;
  int mu = 0;
  int eta = 0;
  int two_nu_minus_2 = 0;
  bool holds = false;  // mu <= eta, and eta <= 2 nu - 2 when an edge exists
};

/// Computes both parameters by oracle and checks the two-sided bounds.
/// Desk scale.
BoundsReport check_bounds(const Graph& g);

}  // namespace equimatch

#endif  // EQUIMATCH_EQUIMATCHABLE_SETS_H_
