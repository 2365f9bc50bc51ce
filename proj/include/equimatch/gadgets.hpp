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

#ifndef EQUIMATCH_GADGETS_H_
#define EQUIMATCH_GADGETS_H_

#include "equimatch/graph.hpp"

namespace equimatch {

/// Join of two copies of g with a clique on 2|V(g)| vertices. Always has a
/// perfect matching, and its matching gap equals the independence number of
/// g, which transfers independence-number hardness to the gap.
Graph make_gap_amplifier(const Graph& g);

/// Prism over the odd cycle of length 2k+1, i.e. the Cartesian product with
/// an edge. Triangle-free, expandable, perfectly matchable; its defect meets
/// the 2 nu - 2 ceiling. Requires k >= 2.
Graph make_prism(int k);

/// Complement of the double edge subdivision. Input must be cubic with at
/// least 4 vertices; the result is expandable with a perfect matching and
/// its defect equals tau(g) + |E(g)|.
Graph make_subdivision_complement(const Graph& g);

/// k disjoint paths on four vertices. Gap and defect both equal k.
Graph make_kp4(int k);

/// Same with the k inner neighbors of the chosen leaves (vertices 4i+1)
/// turned into a clique, which makes the graph connected while preserving
/// gap and defect.
Graph make_kp4_connected(int k);

/// Fixed 10-vertex fixture with matching gap 2 whose maximal matchings never
/// carry two vertex-disjoint augmenting paths on four vertices. Its unique
/// minimum maximal matching is {(1,2), (5,6), (3,8)}.
Graph gap_two_fixture();

}  // namespace equimatch

#endif  // EQUIMATCH_GADGETS_H_
