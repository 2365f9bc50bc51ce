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

#ifndef EQUIMATCH_SERIALIZE_H_
#define EQUIMATCH_SERIALIZE_H_

#include <string>

#include <json.hpp>

#include "equimatch/equimatchable_sets.hpp"
#include "equimatch/gallai_edmonds.hpp"
#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"
#include "equimatch/matching_gap.hpp"

namespace equimatch {

// Structured-document output. Every document carries a "schema" version
// field and a "type" tag. Keys are emitted in sorted order, so documents are
// byte-stable for a fixed input.

inline constexpr const char* kSchemaVersion = "equimatch/1";

nlohmann::json make_document(const std::string& type);

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Graph& g, const Matching& m);  // with exposed set
nlohmann::json to_json(const GallaiEdmondsDecomposition& d);
nlohmann::json to_json(const Graph& g, const DecompositionGapCertificate& c);
nlohmann::json to_json(const Graph& g, const ExposureGapCertificate& c);
nlohmann::json to_json(const Graph& g, const EquimatchableSetReport& r);
nlohmann::json to_json(const Exp2Hypergraph& h);
nlohmann::json to_json(const BoundsReport& r);

}  // namespace equimatch

#endif  // EQUIMATCH_SERIALIZE_H_
