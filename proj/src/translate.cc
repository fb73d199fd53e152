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

#include "crflow/translate.h"

#include <algorithm>
#include <type_traits>
#include <vector>

#include "crflow/closure.h"
#include "crflow/errors.h"

namespace crflow {
namespace {

void require_names(const NameSet& names, std::string_view field) {
  for (const auto& name : names) {
    if (name.empty()) {
      throw ValidationError(std::string(field) + ": empty name");
    }
  }
}

void require_declared(const NameSet& names, const std::string& name,
                      const std::string& field, std::string_view what) {
  if (!names.contains(name)) {
    throw ValidationError(field + ": " + std::string(what) + " '" + name +
                          "' is not declared");
  }
}

void require_disjoint(const NameSet& objects, const NameSet& subjects) {
  for (const auto& name : objects) {
    if (subjects.contains(name)) {
      throw ValidationError("subjects: '" + name +
                            "' is declared both as object and subject");
    }
  }
}

// Maps a name set onto dense indices and back, for closure computations.
class NameIndex {
 public:
  explicit NameIndex(const NameSet& names)
      : names_(names.begin(), names.end()) {}

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }

  std::size_t index(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    return static_cast<std::size_t>(it - names_.begin());
  }

  ReachabilityMatrix closure(const std::set<NamePair>& pairs) const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.emplace_back(index(a), index(b));
    return warshall_closure(size(), edges);
  }

 private:
  std::vector<std::string> names_;
};

void add_port_pair(InterfaceSet& interfaces, const std::string& entity) {
  interfaces.insert(InterfaceId::Explicit(entity, Mode::kRead));
  interfaces.insert(InterfaceId::Explicit(entity, Mode::kWrite));
}

// Both translation rules for one (object, subject, mode) permission.
Flow dac_flow(const std::string& object, const std::string& subject,
              Mode mode) {
  if (mode == Mode::kWrite) {
    return Flow(InterfaceId::Explicit(subject, Mode::kRead),
                InterfaceId::Explicit(object, Mode::kWrite));
  }
  return Flow(InterfaceId::Explicit(object, Mode::kRead),
              InterfaceId::Explicit(subject, Mode::kWrite));
}

// Closure of a validated lattice, made reflexive.
ReachabilityMatrix lattice_order(const LatticePolicy& policy,
                                 const NameIndex& labels) {
  auto m = labels.closure(policy.order);
  for (std::size_t i = 0; i < labels.size(); ++i) m.set(i, i);
  return m;
}

// Closure of a validated role hierarchy with per-role privilege sets.
class RoleModel {
 public:
  explicit RoleModel(const RbacPolicy& policy)
      : policy_(policy),
        roles_(policy.roles),
        closure_(roles_.closure(policy.hierarchy)) {}

  std::size_t require_role(std::string_view role) const {
    if (!policy_.roles.contains(std::string(role))) {
      throw UnknownNameError("role", std::string(role));
    }
    return roles_.index(role);
  }

  NameSet seniority(std::string_view role) const {
    std::size_t r = require_role(role);
    NameSet juniors;
    for (std::size_t j = 0; j < roles_.size(); ++j) {
      if (j != r && closure_.test(r, j)) juniors.insert(roles_.name(j));
    }
    return juniors;
  }

  PermissionSet privileges(std::string_view role) const {
    PermissionSet result = assignment(std::string(role));
    for (const auto& junior : seniority(role)) {
      const auto& inherited = assignment(junior);
      result.insert(inherited.begin(), inherited.end());
    }
    return result;
  }

  std::set<NamePair> closure_pairs() const {
    std::set<NamePair> pairs;
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      for (std::size_t j = 0; j < roles_.size(); ++j) {
        if (closure_.test(i, j)) pairs.emplace(roles_.name(i), roles_.name(j));
      }
    }
    return pairs;
  }

 private:
  const PermissionSet& assignment(const std::string& role) const {
    static const PermissionSet kNone;
    auto it = policy_.assignments.find(role);
    return it == policy_.assignments.end() ? kNone : it->second;
  }

  const RbacPolicy& policy_;
  NameIndex roles_;
  ReachabilityMatrix closure_;
};

}  // namespace

RbacSemantics parse_rbac_semantics(std::string_view text) {
  if (text == "literal") return RbacSemantics::kLiteral;
  if (text == "cross-object") return RbacSemantics::kCrossObject;
  throw ParseError("unknown RBAC semantics '" + std::string(text) +
                   "' (expected literal or cross-object)");
}

std::string_view rbac_semantics_name(RbacSemantics semantics) {
  return semantics == RbacSemantics::kLiteral ? "literal" : "cross-object";
}

void validate_policy(const AclPolicy& policy) {
  require_names(policy.objects, "objects");
  require_names(policy.subjects, "subjects");
  require_disjoint(policy.objects, policy.subjects);
  for (const auto& [object, permissions] : policy.entries) {
    const std::string field = "entries." + object;
    require_declared(policy.objects, object, field, "object");
    for (const auto& p : permissions) {
      require_declared(policy.subjects, p.name, field, "subject");
    }
  }
}

void validate_policy(const CapabilityPolicy& policy) {
  require_names(policy.objects, "objects");
  require_names(policy.subjects, "subjects");
  require_disjoint(policy.objects, policy.subjects);
  for (const auto& [subject, permissions] : policy.entries) {
    const std::string field = "entries." + subject;
    require_declared(policy.subjects, subject, field, "subject");
    for (const auto& p : permissions) {
      require_declared(policy.objects, p.name, field, "object");
    }
  }
}

void validate_policy(const LatticePolicy& policy) {
  require_names(policy.labels, "labels");
  require_names(policy.entities, "entities");
  for (const auto& [lower, higher] : policy.order) {
    require_declared(policy.labels, lower, "order", "label");
    require_declared(policy.labels, higher, "order", "label");
  }
  for (const auto& [entity, label] : policy.labelling) {
    require_declared(policy.entities, entity, "labelling", "entity");
    require_declared(policy.labels, label, "labelling." + entity, "label");
  }
  for (const auto& entity : policy.entities) {
    if (!policy.labelling.contains(entity)) {
      throw ValidationError("labelling: entity '" + entity + "' has no label");
    }
  }

  NameIndex labels(policy.labels);
  auto m = lattice_order(policy, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (m.test(i, j) && m.test(j, i)) {
        throw ValidationError("order: labels '" + labels.name(i) + "' and '" +
                              labels.name(j) +
                              "' dominate each other (not a partial order)");
      }
    }
  }
}

void validate_policy(const RbacPolicy& policy) {
  require_names(policy.roles, "roles");
  for (const auto& [role, permissions] : policy.assignments) {
    require_declared(policy.roles, role, "assignments", "role");
    for (const auto& p : permissions) {
      if (p.name.empty()) {
        throw ValidationError("assignments." + role + ": empty object name");
      }
    }
  }
  for (const auto& [senior, junior] : policy.hierarchy) {
    require_declared(policy.roles, senior, "hierarchy", "role");
    require_declared(policy.roles, junior, "hierarchy", "role");
  }

  NameIndex roles(policy.roles);
  auto m = roles.closure(policy.hierarchy);
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (m.test(i, i)) {
      throw ValidationError("hierarchy: role '" + roles.name(i) +
                            "' is part of a cycle");
    }
  }
}

AclPolicy transpose(const CapabilityPolicy& policy) {
  AclPolicy acl{policy.objects, policy.subjects, {}};
  for (const auto& [subject, permissions] : policy.entries) {
    for (const auto& p : permissions) {
      acl.entries[p.name].insert(Permission{subject, p.mode});
    }
  }
  return acl;
}

CommonRepresentation acl_to_cr(const AclPolicy& policy) {
  validate_policy(policy);
  InterfaceSet interfaces;
  for (const auto& o : policy.objects) add_port_pair(interfaces, o);
  for (const auto& s : policy.subjects) add_port_pair(interfaces, s);

  FlowSet flows;
  for (const auto& [object, permissions] : policy.entries) {
    for (const auto& p : permissions) {
      flows.insert(dac_flow(object, p.name, p.mode));
    }
  }
  return CommonRepresentation(std::move(interfaces), std::move(flows));
}

CommonRepresentation capability_to_cr(const CapabilityPolicy& policy) {
  validate_policy(policy);
  return acl_to_cr(transpose(policy));
}

bool lattice_dominates(const LatticePolicy& policy, std::string_view lower,
                       std::string_view higher) {
  validate_policy(policy);
  for (auto label : {lower, higher}) {
    if (!policy.labels.contains(std::string(label))) {
      throw UnknownNameError("label", std::string(label));
    }
  }
  NameIndex labels(policy.labels);
  return lattice_order(policy, labels)
      .test(labels.index(lower), labels.index(higher));
}

CommonRepresentation lbac_to_cr(const LatticePolicy& policy) {
  validate_policy(policy);
  NameIndex labels(policy.labels);
  auto order = lattice_order(policy, labels);

  InterfaceSet interfaces;
  for (const auto& e : policy.entities) {
    interfaces.insert(InterfaceId::Implicit(e, std::string(kLbacLabel)));
  }
  FlowSet flows;
  for (const auto& a : policy.entities) {
    std::size_t la = labels.index(policy.labelling.at(a));
    for (const auto& b : policy.entities) {
      if (a == b) continue;
      if (order.test(la, labels.index(policy.labelling.at(b)))) {
        flows.emplace(InterfaceId::Implicit(a, std::string(kLbacLabel)),
                      InterfaceId::Implicit(b, std::string(kLbacLabel)));
      }
    }
  }
  return CommonRepresentation(std::move(interfaces), std::move(flows));
}

std::set<NamePair> rbac_closure(const RbacPolicy& policy) {
  validate_policy(policy);
  return RoleModel(policy).closure_pairs();
}

NameSet rbac_seniority(const RbacPolicy& policy, std::string_view role) {
  validate_policy(policy);
  return RoleModel(policy).seniority(role);
}

PermissionSet rbac_privileges(const RbacPolicy& policy, std::string_view role) {
  validate_policy(policy);
  return RoleModel(policy).privileges(role);
}

CommonRepresentation rbac_to_cr(const RbacPolicy& policy,
                                RbacSemantics semantics) {
  validate_policy(policy);
  RoleModel model(policy);

  InterfaceSet interfaces;
  for (const auto& [role, permissions] : policy.assignments) {
    for (const auto& p : permissions) add_port_pair(interfaces, p.name);
  }

  FlowSet flows;
  for (const auto& role : policy.roles) {
    const PermissionSet privileges = model.privileges(role);
    for (const auto& read : privileges) {
      if (read.mode != Mode::kRead) continue;
      for (const auto& write : privileges) {
        if (write.mode != Mode::kWrite) continue;
        if (semantics == RbacSemantics::kLiteral && read.name != write.name) {
          continue;
        }
        flows.emplace(InterfaceId::Explicit(read.name, Mode::kRead),
                      InterfaceId::Explicit(write.name, Mode::kWrite));
      }
    }
  }
  return CommonRepresentation(std::move(interfaces), std::move(flows));
}

CommonRepresentation translate(const SourcePolicy& policy,
                               RbacSemantics semantics) {
  return std::visit(
      [semantics](const auto& p) -> CommonRepresentation {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, AclPolicy>) {
          return acl_to_cr(p);
        } else if constexpr (std::is_same_v<T, CapabilityPolicy>) {
          return capability_to_cr(p);
        } else if constexpr (std::is_same_v<T, LatticePolicy>) {
          return lbac_to_cr(p);
        } else {
          return rbac_to_cr(p, semantics);
        }
      },
      policy);
}

}  // namespace crflow
