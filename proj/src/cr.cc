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

#include "crflow/cr.h"

#include <deque>
#include <map>
#include <ostream>

#include "crflow/errors.h"

namespace crflow {

std::string_view mode_name(Mode mode) {
  return mode == Mode::kRead ? "R" : "W";
}

bool InterfaceId::has_valid_names() const {
  if (const auto* port = explicit_port()) return !port->entity.empty();
  const auto* port = implicit_port();
  return !port->agent.empty() && !port->label.empty();
}

std::string InterfaceId::to_string() const {
  if (const auto* port = explicit_port()) {
    return port->entity + "." + std::string(mode_name(port->mode));
  }
  const auto* port = implicit_port();
  return port->agent + "#" + port->label;
}

InterfaceId InterfaceId::parse(std::string_view text) {
  if (auto hash = text.find('#'); hash != std::string_view::npos) {
    auto agent = text.substr(0, hash);
    auto label = text.substr(hash + 1);
    if (agent.empty() || label.empty()) {
      throw ParseError("malformed implicit interface '" + std::string(text) +
                       "' (expected agent#label)");
    }
    return Implicit(std::string(agent), std::string(label));
  }
  if (text.size() >= 3 && text[text.size() - 2] == '.') {
    char mode = text.back();
    if (mode == 'R' || mode == 'W') {
      return Explicit(std::string(text.substr(0, text.size() - 2)),
                      mode == 'R' ? Mode::kRead : Mode::kWrite);
    }
  }
  throw ParseError("malformed interface '" + std::string(text) +
                   "' (expected entity.R, entity.W or agent#label)");
}

Flow::Flow(InterfaceId from, InterfaceId to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (from_ == to_) {
    throw ValidationError("self-flow on interface " + from_.to_string());
  }
}

std::string_view grant_result_name(GrantResult result) {
  switch (result) {
    case GrantResult::kPermit:
      return "permit";
    case GrantResult::kDeny:
      return "deny";
    case GrantResult::kUndefined:
      return "undefined";
  }
  return "undefined";
}

AvailabilityGraph::AvailabilityGraph(InterfaceSet vertices,
                                     std::set<Edge> edges)
    : vertices_(std::move(vertices)) {
  for (auto& [a, b] : edges) {
    if (b < a) {
      edges_.emplace(b, a);
    } else {
      edges_.emplace(a, b);
    }
  }
}

bool AvailabilityGraph::has_edge(const InterfaceId& a,
                                 const InterfaceId& b) const {
  return b < a ? edges_.contains({b, a}) : edges_.contains({a, b});
}

std::size_t AvailabilityGraph::component_count() const {
  std::map<InterfaceId, std::vector<const InterfaceId*>> adjacency;
  for (const auto& v : vertices_) adjacency[v];
  for (const auto& [a, b] : edges_) {
    adjacency[a].push_back(&b);
    adjacency[b].push_back(&a);
  }

  std::set<InterfaceId> seen;
  std::size_t components = 0;
  for (const auto& start : vertices_) {
    if (seen.contains(start)) continue;
    ++components;
    std::deque<const InterfaceId*> queue{&start};
    seen.insert(start);
    while (!queue.empty()) {
      const InterfaceId* current = queue.front();
      queue.pop_front();
      for (const InterfaceId* next : adjacency[*current]) {
        if (seen.insert(*next).second) queue.push_back(next);
      }
    }
  }
  return components;
}

std::vector<std::string> validate(const CommonRepresentation& cr) {
  std::vector<std::string> violations;
  for (const auto& id : cr.interfaces()) {
    if (!id.has_valid_names()) {
      violations.push_back("interface '" + id.to_string() +
                           "' has an empty name component");
    }
  }
  for (const auto& flow : cr.flows()) {
    for (const auto* endpoint : {&flow.from(), &flow.to()}) {
      if (!cr.has_interface(*endpoint)) {
        violations.push_back("flow " + flow.from().to_string() + " -> " +
                             flow.to().to_string() + ": endpoint " +
                             endpoint->to_string() + " is not declared");
      }
    }
  }
  return violations;
}

void require_valid(const CommonRepresentation& cr) {
  auto violations = validate(cr);
  if (!violations.empty()) throw ValidationError(violations.front());
}

GrantResult grant(const InterfaceId& from, const InterfaceId& to,
                  const CommonRepresentation& cr) {
  if (!cr.has_interface(from) || !cr.has_interface(to)) {
    return GrantResult::kUndefined;
  }
  // Distinct endpoints are required for a flow; (x, x) is never permitted.
  if (from == to) return GrantResult::kDeny;
  return cr.has_flow(Flow(from, to)) ? GrantResult::kPermit
                                     : GrantResult::kDeny;
}

AvailabilityGraph availability_graph(const CommonRepresentation& cr) {
  std::set<AvailabilityGraph::Edge> edges;
  for (const auto& flow : cr.flows()) {
    if (flow.from() < flow.to() && cr.has_flow(flow.inverse())) {
      edges.emplace(flow.from(), flow.to());
    }
  }
  return AvailabilityGraph(cr.interfaces(), std::move(edges));
}

bool is_lively(const CommonRepresentation& cr) {
  return availability_graph(cr).component_count() == 1;
}

bool reachable(const CommonRepresentation& cr, const InterfaceId& src,
               const InterfaceId& dst) {
  for (const auto* id : {&src, &dst}) {
    if (!cr.has_interface(*id)) {
      throw UnknownNameError("interface", id->to_string());
    }
  }
  if (src == dst) return true;

  std::map<InterfaceId, std::vector<const InterfaceId*>> successors;
  for (const auto& flow : cr.flows()) {
    successors[flow.from()].push_back(&flow.to());
  }
  std::set<InterfaceId> seen{src};
  std::deque<const InterfaceId*> queue{&src};
  while (!queue.empty()) {
    const InterfaceId* current = queue.front();
    queue.pop_front();
    auto it = successors.find(*current);
    if (it == successors.end()) continue;
    for (const InterfaceId* next : it->second) {
      if (*next == dst) return true;
      if (seen.insert(*next).second) queue.push_back(next);
    }
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, Mode mode) {
  return os << mode_name(mode);
}

std::ostream& operator<<(std::ostream& os, const InterfaceId& id) {
  return os << id.to_string();
}

std::ostream& operator<<(std::ostream& os, const Flow& flow) {
  return os << "(" << flow.from() << ", " << flow.to() << ")";
}

std::ostream& operator<<(std::ostream& os, const CommonRepresentation& cr) {
  os << "({";
  const char* sep = "";
  for (const auto& id : cr.interfaces()) {
    os << sep << id;
    sep = ", ";
  }
  os << "}, {";
  sep = "";
  for (const auto& flow : cr.flows()) {
    os << sep << flow;
    sep = ", ";
  }
  return os << "})";
}

std::ostream& operator<<(std::ostream& os, GrantResult result) {
  return os << grant_result_name(result);
}

}  // namespace crflow
