// Copyright 2026 The crflow Authors
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

// JSON documents understood by crflow.
//
// CR:
//   {"interfaces": [<interface>...], "flows": [{"from": <interface>,
//                                              "to": <interface>}...]}
//   <interface> = {"kind": "explicit", "entity": "o1", "mode": "R"|"W"}
//               | {"kind": "implicit", "agent": "a", "label": "x"}
//
// Policies ("kind" selects the model):
//   {"kind": "acl", "objects": [...], "subjects": [...],
//    "entries": {"o1": [{"subject": "s1", "mode": "R"}, ...], ...}}
//   {"kind": "capabilities", "objects": [...], "subjects": [...],
//    "entries": {"s1": [{"object": "o1", "mode": "W"}, ...], ...}}
//   {"kind": "lbac", "labels": [...], "order": [["low", "high"], ...],
//    "entities": [...], "labelling": {"A": "low", ...}}
//   {"kind": "rbac", "roles": [...],
//    "assignments": {"r": [{"object": "o1", "mode": "R"}, ...], ...},
//    "hierarchy": [["senior", "junior"], ...]}
//
// Composition rule:
//   {"condition": <condition>, "then": <action>, "else": <action>}
//   <condition> = {"kind": "no-conflicts"}
//               | {"kind": "conflicts-complementary-in",
//                  "side": "first"|"second"}
//               | {"kind": "conflict-count-at-most", "n": 3}
//               | {"kind": "and", "all": [<condition>...]}
//               | {"kind": "not", "condition": <condition>}
//   <action> = "merge" | "append" | "append-strict" | "reject"
//
// Readers reject unknown fields. Shape problems raise ParseError; invariant
// violations raise ValidationError. Writers emit arrays in canonical order,
// so equal values serialize to identical bytes.

#ifndef CRFLOW_JSON_IO_H_
#define CRFLOW_JSON_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "crflow/cr.h"
#include "crflow/metapolicy.h"
#include "crflow/translate.h"
#include "json.hpp"

namespace crflow {

using Json = nlohmann::ordered_json;

Json to_json(const InterfaceId& id);
Json to_json(const Flow& flow);
Json to_json(const FlowSet& flows);
Json to_json(const CommonRepresentation& cr);
Json to_json(const Condition& condition);
Json to_json(const CompositionRule& rule);
Json to_json(const CompositionDecision& decision);

// Pretty-printed with a trailing newline.
std::string dump(const Json& json);
std::string dump_cr(const CommonRepresentation& cr);

// Throws ParseError for malformed JSON.
Json parse_json(std::string_view text);

// Throws ParseError if the file cannot be read.
std::string read_file(const std::filesystem::path& path);

InterfaceId interface_from_json(const Json& json);
// The result is validated.
CommonRepresentation cr_from_json(const Json& json);
CommonRepresentation parse_cr(std::string_view text);

// The result is validated.
SourcePolicy policy_from_json(const Json& json);
SourcePolicy parse_policy(std::string_view text);

Condition condition_from_json(const Json& json);
CompositionRule rule_from_json(const Json& json);
CompositionRule parse_rule(std::string_view text);

}  // namespace crflow

#endif  // CRFLOW_JSON_IO_H_
