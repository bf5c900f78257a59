// Copyright 2026 The Magic Toolkit Authors
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

#include <json.hpp>

#include "magic/channel.hpp"
#include "magic/membership.hpp"
#include "magic/monotones.hpp"
#include "magic/operator.hpp"
#include "magic/reduction.hpp"

namespace magic {

using Json = nlohmann::ordered_json;

// {"n": int, "entries": [[[re, im], ...], ...]} row-major.
Json operator_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);
// A state file holds either "entries" (density matrix) or "ket" ([[re, im], ...]).
DensityMatrix state_from_json(const Json& j);
HermitianOperator operator_from_json(const Json& j);
QuantumChannel channel_from_json(const Json& j);
Json ket_to_json(const CVector& psi);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string read_text_file(const std::string& path);

// Row-major (re, im) float64 pairs, little-endian, base64.
std::string encode_matrix(const CMatrix& m);
CMatrix decode_matrix(const std::string& text, Index dim);

Json artifact_to_json(const ReductionArtifact& a);
ReductionArtifact artifact_from_json(const Json& j);

Json certificate_to_json(const RobustnessCertificate& c);
Json verdict_to_json(const MembershipVerdict& v);
Json witness_to_json(const WitnessReport& w);
Json wwd_to_json(const WwdResult& r);
Json verification_to_json(const VerificationReport& r);

}  // namespace magic
