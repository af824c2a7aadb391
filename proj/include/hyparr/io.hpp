// Copyright 2026 The hyparr Authors.
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

#include "hyparr/arrangement.hpp"
#include "hyparr/characters.hpp"
#include "hyparr/hyde.hpp"
#include "hyparr/qpoly.hpp"

namespace hyparr {

using Json = nlohmann::ordered_json;

// {"dim": n, "hyperplanes": [{"normal": ["1","-1"], "offset": "0"}, ...]}.
Arrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& a);
// A builtin name ("braid:n", "typeB:n", "boolean:n") or a JSON file path.
Arrangement parse_arrangement(const std::string& source);

Json label_to_json(const ConjClassLabel& c);
ConjClassLabel label_from_json(const Json& j, Family family);

// {"group":"A3","values":[{"label":{"lambda":[2,1]},"value":"0"}, ...]}.
Json class_function_to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const Json& j);

Json qpoly_to_json(const QPoly& p);
Json sign_vector_to_json(const SignVector& s);
Json subspace_to_json(const AffineSubspace& s);
Json report_to_json(const VerificationReport& r);

// Parses "A3" / "B2".
std::pair<Family, int> parse_group_name(const std::string& s);
Family parse_family(const std::string& s);

}  // namespace hyparr
