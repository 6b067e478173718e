// Copyright 2026 The ngsinger Authors
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

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ngsinger/diffsets.hpp"
#include "ngsinger/norm_graph.hpp"
#include "ngsinger/norm_systems.hpp"

// JSON certificates. Each one embeds the field descriptor so it can be
// re-verified without any other state. Elements are written as
// {"power": k, "coords": [c_0, ...]} with power null for zero.

namespace ngs {

using json = nlohmann::json;

json to_json(const FieldDescriptor& d);
FieldDescriptor field_descriptor_from_json(const json& j);

json to_json(const Elt& e);
/// Throws InvalidCertificate when coords and power disagree.
Elt element_from_json(const FieldCtx& F, const json& j);

/// kind "field": descriptor plus order and primitive order.
json field_certificate(const FieldCtx& F);

/// kind "diffset": a difference set in the norm-one group of tc.
json diffset_certificate(const TowerCtx& tc, const std::string& name,
                         std::span<const Elt> elements, std::uint64_t lambda);

json to_json(const SixSolutionCert& cert);
/// Rebuilds the field from the embedded descriptor.
SixSolutionCert six_solution_from_json(const json& j);

json to_json(const BicliqueCert& cert);
BicliqueCert biclique_from_json(const json& j);

struct VerifyOutcome {
  std::string kind;
  std::string summary;
};

/// Re-verifies a certificate of any kind. Throws InvalidCertificate for
/// malformed input and VerificationFailed when a claim does not hold.
VerifyOutcome verify_certificate(const json& j);

}  // namespace ngs
