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

#include "equimatch/serialize.hpp"

namespace equimatch {

using nlohmann::json;

json make_document(const std::string& type) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["type"] = type;
  return doc;
}

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

}  // namespace

json to_json(const Graph& g) {
  json doc = make_document("graph");
  doc["n"] = g.vertex_count();
  doc["m"] = g.edge_count();
  doc["edges"] = edges_to_json(g.edges());
  return doc;
}

json to_json(const Graph& g, const Matching& m) {
  json doc;
  doc["edges"] = edges_to_json(m.edges);
  doc["size"] = m.size();
  doc["exposed"] = m.exposed_vertices(g);
  return doc;
}

json to_json(const GallaiEdmondsDecomposition& d) {
  json doc = make_document("gallai-edmonds");
  doc["D"] = d.d;
  doc["A"] = d.a;
  doc["C"] = d.c;
  doc["components"] = d.d_components;
  doc["rho"] = d.rho;
  return doc;
}

json to_json(const Graph& g, const DecompositionGapCertificate& c) {
  json doc = make_document("gap-certificate");
  doc["variant"] = "decomposition";
  doc["I"] = c.independent_set;
  doc["M_A"] = edges_to_json(c.attachment_matching.edges);
  doc["M_A_star"] = edges_to_json(c.attachment_star.edges);
  json parts = json::array();
  for (const auto& part : c.component_matchings) {
    json entry;
    entry["component"] = part.component;
    entry["side"] = part.in_c ? "C" : "D";
    entry["matching"] = edges_to_json(part.matching.edges);
    if (part.exposed_root) entry["exposed_root"] = *part.exposed_root;
    parts.push_back(entry);
  }
  doc["component_matchings"] = parts;
  doc["exposed_roots"] = c.exposed_roots();
  doc["reassembled"] = to_json(g, c.reassembled());
  return doc;
}

json to_json(const Graph& g, const ExposureGapCertificate& c) {
  json doc = make_document("gap-certificate");
  doc["variant"] = "exposure";
  doc["M_star"] = to_json(g, c.maximum);
  doc["I"] = c.independent_set;
  doc["Z"] = c.swap_set;
  doc["T"] = c.touched;
  doc["U"] = c.untouched;
  doc["H_matching"] = to_json(g, c.h_matching);
  return doc;
}

json to_json(const Graph& g, const EquimatchableSetReport& r) {
  json doc = make_document("equimatchable-set");
  doc["set"] = r.set;
  switch (r.verdict) {
    case SetVerdict::Equimatchable:
      doc["verdict"] = "equimatchable";
      break;
    case SetVerdict::NotEquimatchable:
      doc["verdict"] = "not-equimatchable";
      break;
    case SetVerdict::Vacuous:
      doc["verdict"] = "vacuous";
      break;
  }
  if (r.counterexample) {
    doc["counterexample"] = json::array(
        {to_json(g, r.counterexample->first), to_json(g, r.counterexample->second)});
  }
  return doc;
}

json to_json(const Exp2Hypergraph& h) {
  json doc = make_document("exp2-hypergraph");
  doc["n"] = h.vertex_count;
  doc["uniformity"] = h.uniformity;
  doc["hyperedges"] = h.hyperedges;
  return doc;
}

json to_json(const BoundsReport& r) {
  json doc = make_document("bounds");
  doc["nu"] = r.nu;
  doc["mu"] = r.mu;
  doc["eta"] = r.eta;
  doc["two_nu_minus_2"] = r.two_nu_minus_2;
  doc["holds"] = r.holds;
  return doc;
}

}  // namespace equimatch
