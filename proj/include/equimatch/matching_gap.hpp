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

#ifndef EQUIMATCH_MATCHING_GAP_H_
#define EQUIMATCH_MATCHING_GAP_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "equimatch/gallai_edmonds.hpp"
#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"

namespace equimatch {

// The matching gap mu = nu - beta measures the spread of maximal matching
// sizes; it is zero exactly for equimatchable graphs. This module hosts the
// deciders for "mu >= k", the equimatchability recognizers, and the witness
// machinery around augmenting paths on four vertices.

/// A maximal matching together with an augmenting path u-w-y-v on four
/// vertices: u and v exposed, wy matched, uw and yv present but unmatched.
/// Swapping wy for {uw, yv} yields a maximal matching one edge larger.
struct AugmentingP4Witness {
  Matching matching;
  std::array<int, 4> path;  // u, w, y, v
};

/// All augmenting paths on four vertices for a maximal matching, as (u,w,y,v)
/// tuples with u < v, ordered lexicographically.
std::vector<std::array<int, 4>> augmenting_p4_paths(const Graph& g,
                                                    const Matching& m);

/// Two maximal matchings of different sizes derived from one augmenting-path
/// configuration; a verifiable witness that a graph is not equimatchable.
struct NonEquimatchableWitness {
  std::array<int, 4> path;  // u, w, y, v
  Matching smaller;         // maximal, exposes u and v, contains wy
  Matching larger;          // smaller with wy swapped for uw, yv
};

/// Polynomial search for an augmenting-path configuration: a path u-w-y-v
/// with u, v non-adjacent such that some matching of g - u - v contains wy
/// and covers N({u,v}) \ {w,y}. Returns the first configuration found, or
/// nullopt when g is equimatchable.
std::optional<NonEquimatchableWitness> find_gap_configuration(const Graph& g);

/// Polynomial recognizer: true iff every maximal matching has maximum size.
bool is_equimatchable(const Graph& g);

// ---------------------------------------------------------------------------
// Deciders for "mu(g) >= k". All four agree; they differ in what they
// enumerate and therefore in which parameter keeps them fast.
// ---------------------------------------------------------------------------

/// Exhaustive baseline via the minimum maximal matching. Desk scale.
bool gap_at_least_brute(const Graph& g, int k);

/// Enumerates independent sets I with |V| - 2(nu - k) vertices and asks for a
/// perfect matching of g - I. On yes, returns that perfect matching as a
/// maximal matching of g with exactly nu - k edges.
std::optional<Matching> decide_gap_is_enum(const Graph& g, int k);

/// Certificate built around the decomposition: an exposed independent set I,
/// an attachment matching M_A saturating A \ I, a system M_A* pairing A with
/// distinct D-components, and per-component matchings that reassemble into a
/// maximal matching of size nu - k.
struct DecompositionGapCertificate {
  struct ComponentMatching {
    std::vector<int> component;        // original vertex ids, sorted
    bool in_c = false;                 // C-component or D-component
    Matching matching;                 // perfect or near-perfect on the rest
    std::optional<int> exposed_root;   // the single exposed vertex, if any
  };

  std::vector<int> independent_set;    // I, |I| = 2k
  Matching attachment_matching;        // M_A
  Matching attachment_star;            // M_A*
  std::vector<ComponentMatching> component_matchings;

  std::vector<int> exposed_roots() const;
  Matching reassembled() const;        // M_A together with all component parts
};

/// Decider that is efficient when k and |A| are small.
std::optional<DecompositionGapCertificate> decide_gap_decomposition(const Graph& g,
                                                                    int k);

/// Certificate built around one fixed maximum matching M*: an exposed
/// independent set I of saturated vertices, a swap set Z standing in for the
/// exposed neighbors of I, and a perfect matching of the remaining graph that
/// is itself the desired maximal matching of size nu - k.
struct ExposureGapCertificate {
  Matching maximum;                 // M*
  std::vector<int> independent_set; // I
  std::vector<int> swap_set;        // Z
  std::vector<int> touched;         // Exp(M*) within N(I)
  std::vector<int> untouched;       // Exp(M*) outside N(I)
  Matching h_matching;              // perfect matching of g minus I, Z, untouched
};

/// Decider that is efficient when k and rho are small.
std::optional<ExposureGapCertificate> decide_gap_exposure(const Graph& g, int k);

/// Independent re-checks. On failure, `why` (when given) names the first
/// violated condition. Deciders run these before returning a certificate.
bool verify_gap_certificate(const Graph& g, int k,
                            const DecompositionGapCertificate& certificate,
                            std::string* why = nullptr);
bool verify_gap_certificate(const Graph& g, int k,
                            const ExposureGapCertificate& certificate,
                            std::string* why = nullptr);

enum class GapDecider { Brute, IndependentSetEnum, Decomposition, Exposure };

/// Exact matching gap: after the polynomial equimatchability pre-check, asks
/// the chosen decider for k = 1, 2, ... until the first no.
int compute_matching_gap(const Graph& g,
                         GapDecider decider = GapDecider::Exposure);

// ---------------------------------------------------------------------------
// Witness construction and the unit-gap characterization.
// ---------------------------------------------------------------------------

/// A maximal matching of size exactly k carrying an explicit augmenting path
/// on four vertices. Built by taking a shortest augmenting path for a size-k
/// maximal matching and, when it is longer than three edges, shifting the
/// matching one step toward the far end. Exists for every k in
/// [beta, nu - 1]; nullopt outside. Desk scale (uses the exhaustive minimum).
std::optional<AugmentingP4Witness> find_augmenting_p4_witness(const Graph& g,
                                                              int k);

/// True iff mu(g) == 1, via compute_matching_gap.
bool is_almost_equimatchable(const Graph& g,
                             GapDecider decider = GapDecider::Exposure);

/// Exhaustive variant over all maximal matchings: some matching has an
/// augmenting path on four vertices, and all matchings that do share one
/// size. Desk scale.
bool is_almost_equimatchable_exhaustive(const Graph& g);

}  // namespace equimatch

#endif  // EQUIMATCH_MATCHING_GAP_H_
