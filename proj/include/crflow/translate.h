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

// Translation of classical access-control policies into CRs.

#ifndef CRFLOW_TRANSLATE_H_
#define CRFLOW_TRANSLATE_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "crflow/cr.h"

namespace crflow {

// A (name, mode) pair. Depending on context the name is a subject (ACL
// entries) or an object (capabilities, role assignments).
struct Permission {
  std::string name;
  Mode mode;

  auto operator<=>(const Permission&) const = default;
};

using PermissionSet = std::set<Permission>;
using NameSet = std::set<std::string>;
using NamePair = std::pair<std::string, std::string>;

// Access control list: object -> {(subject, mode)}.
struct AclPolicy {
  NameSet objects;
  NameSet subjects;
  std::map<std::string, PermissionSet> entries;
};

// Capability list: subject -> {(object, mode)}.
struct CapabilityPolicy {
  NameSet objects;
  NameSet subjects;
  std::map<std::string, PermissionSet> entries;
};

// Labels with a dominance order given as cover pairs (lower, higher), and a
// labelling of entities.
struct LatticePolicy {
  NameSet labels;
  std::set<NamePair> order;
  NameSet entities;
  std::map<std::string, std::string> labelling;
};

// Role assignments plus a hierarchy of (senior, junior) pairs; a senior role
// inherits every privilege of its juniors.
struct RbacPolicy {
  NameSet roles;
  std::map<std::string, PermissionSet> assignments;
  std::set<NamePair> hierarchy;
};

using SourcePolicy =
    std::variant<AclPolicy, CapabilityPolicy, LatticePolicy, RbacPolicy>;

enum class RbacSemantics {
  // Flow ((o,R),(o,W)) for each role holding both modes on the same object.
  kLiteral,
  // Flow ((o1,R),(o2,W)) for each role holding read on o1 and write on o2.
  kCrossObject,
};

// Accepts "literal" and "cross-object"; throws ParseError otherwise.
RbacSemantics parse_rbac_semantics(std::string_view text);
std::string_view rbac_semantics_name(RbacSemantics semantics);

// Each check throws ValidationError naming the offending field.
void validate_policy(const AclPolicy& policy);
void validate_policy(const CapabilityPolicy& policy);
void validate_policy(const LatticePolicy& policy);
void validate_policy(const RbacPolicy& policy);

// Regroups capabilities by object.
AclPolicy transpose(const CapabilityPolicy& policy);

// Interfaces (e, R) and (e, W) for every object and subject. A write
// permission (s, W) on o yields ((s,R),(o,W)); a read permission (s, R) on o
// yields ((o,R),(s,W)).
CommonRepresentation acl_to_cr(const AclPolicy& policy);
CommonRepresentation capability_to_cr(const CapabilityPolicy& policy);

// True iff lower <=_L higher in the reflexive-transitive closure of the
// declared covers. Throws UnknownNameError for undeclared labels.
bool lattice_dominates(const LatticePolicy& policy, std::string_view lower,
                       std::string_view higher);

// Entities become implicit interfaces labelled "lbac"; there is a flow
// (x, y) for every pair of distinct entities with label(x) <=_L label(y).
CommonRepresentation lbac_to_cr(const LatticePolicy& policy);

inline constexpr std::string_view kLbacLabel = "lbac";

// Transitive (not reflexive) closure of the role hierarchy.
std::set<NamePair> rbac_closure(const RbacPolicy& policy);

// Roles junior to `role` under the closure, excluding `role` itself.
NameSet rbac_seniority(const RbacPolicy& policy, std::string_view role);

// Own assignment of `role` united with those of all its juniors.
PermissionSet rbac_privileges(const RbacPolicy& policy, std::string_view role);

CommonRepresentation rbac_to_cr(
    const RbacPolicy& policy,
    RbacSemantics semantics = RbacSemantics::kLiteral);

// Dispatches on the policy kind; `semantics` only affects RBAC input.
CommonRepresentation translate(
    const SourcePolicy& policy,
    RbacSemantics semantics = RbacSemantics::kLiteral);

}  // namespace crflow

#endif  // CRFLOW_TRANSLATE_H_
