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

// The common representation (CR) of an access-control policy: a directed
// graph whose vertices are interfaces and whose edges are permitted
// information flows. A flow (from, to) always means that information moves
// from `from` to `to`.

#ifndef CRFLOW_CR_H_
#define CRFLOW_CR_H_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace crflow {

// Access mode of an explicit interface. (e, R) is the port through which the
// content of e leaves; (e, W) is the port through which content enters e.
enum class Mode { kRead, kWrite };

std::string_view mode_name(Mode mode);  // "R" or "W"

// An (entity, mode) port, e.g. (o1, W).
struct ExplicitPort {
  std::string entity;
  Mode mode;

  auto operator<=>(const ExplicitPort&) const = default;
};

// A mode-less port owned by an agent. One agent may own many, told apart by
// label.
struct ImplicitPort {
  std::string agent;
  std::string label;

  auto operator<=>(const ImplicitPort&) const = default;
};

// Vertex identity in a CR. Ordering is canonical: explicit before implicit,
// then by names, then by mode.
class InterfaceId {
 public:
  static InterfaceId Explicit(std::string entity, Mode mode) {
    return InterfaceId(ExplicitPort{std::move(entity), mode});
  }
  static InterfaceId Implicit(std::string agent, std::string label) {
    return InterfaceId(ImplicitPort{std::move(agent), std::move(label)});
  }

  bool is_explicit() const {
    return std::holds_alternative<ExplicitPort>(port_);
  }
  bool is_implicit() const { return !is_explicit(); }

  // Null when the interface is of the other kind.
  const ExplicitPort* explicit_port() const {
    return std::get_if<ExplicitPort>(&port_);
  }
  const ImplicitPort* implicit_port() const {
    return std::get_if<ImplicitPort>(&port_);
  }

  // True when every name component is non-empty.
  bool has_valid_names() const;

  // "entity.R" / "entity.W" for explicit ports, "agent#label" for implicit
  // ones. parse() accepts the same notation.
  std::string to_string() const;
  static InterfaceId parse(std::string_view text);

  auto operator<=>(const InterfaceId&) const = default;
  bool operator==(const InterfaceId&) const = default;

 private:
  explicit InterfaceId(std::variant<ExplicitPort, ImplicitPort> port)
      : port_(std::move(port)) {}

  std::variant<ExplicitPort, ImplicitPort> port_;
};

// A directed edge. Constructing a flow from an interface to itself throws
// ValidationError.
class Flow {
 public:
  Flow(InterfaceId from, InterfaceId to);

  const InterfaceId& from() const { return from_; }
  const InterfaceId& to() const { return to_; }

  Flow inverse() const { return Flow(to_, from_); }

  auto operator<=>(const Flow&) const = default;
  bool operator==(const Flow&) const = default;

 private:
  InterfaceId from_;
  InterfaceId to_;
};

using InterfaceSet = std::set<InterfaceId>;
using FlowSet = std::set<Flow>;

// CR = (interfaces, flows). The constructor does not check that flow
// endpoints are declared; use validate() for that. Loaders and translators
// only ever hand out well-formed values.
class CommonRepresentation {
 public:
  CommonRepresentation() = default;
  CommonRepresentation(InterfaceSet interfaces, FlowSet flows)
      : interfaces_(std::move(interfaces)), flows_(std::move(flows)) {}

  const InterfaceSet& interfaces() const { return interfaces_; }
  const FlowSet& flows() const { return flows_; }

  bool has_interface(const InterfaceId& id) const {
    return interfaces_.contains(id);
  }
  bool has_flow(const Flow& flow) const { return flows_.contains(flow); }
  bool empty() const { return interfaces_.empty() && flows_.empty(); }

  bool operator==(const CommonRepresentation&) const = default;

 private:
  InterfaceSet interfaces_;
  FlowSet flows_;
};

enum class GrantResult { kPermit, kDeny, kUndefined };

std::string_view grant_result_name(GrantResult result);

// Undirected graph with one edge per complementary flow pair of a CR.
class AvailabilityGraph {
 public:
  // Edges are stored with first < second.
  using Edge = std::pair<InterfaceId, InterfaceId>;

  AvailabilityGraph(InterfaceSet vertices, std::set<Edge> edges);

  const InterfaceSet& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }

  // Order-insensitive: has_edge(a, b) == has_edge(b, a).
  bool has_edge(const InterfaceId& a, const InterfaceId& b) const;

  // Number of connected components; zero for the empty graph.
  std::size_t component_count() const;

 private:
  InterfaceSet vertices_;
  std::set<Edge> edges_;
};

// Lists every well-formedness violation: flow endpoints missing from the
// interface set and interfaces with empty names. Empty when `cr` is valid.
std::vector<std::string> validate(const CommonRepresentation& cr);

// Throws ValidationError carrying the first violation, if any.
void require_valid(const CommonRepresentation& cr);

// Undefined unless both interfaces are declared in `cr`; otherwise Permit
// iff the directed flow (from, to) is present.
GrantResult grant(const InterfaceId& from, const InterfaceId& to,
                  const CommonRepresentation& cr);

inline Flow inverse(const Flow& flow) { return flow.inverse(); }

inline bool is_complementary(const Flow& a, const Flow& b) {
  return b == a.inverse();
}

AvailabilityGraph availability_graph(const CommonRepresentation& cr);

// True iff the availability graph has exactly one connected component. The
// empty CR is not lively.
bool is_lively(const CommonRepresentation& cr);

// Directed reachability over the flows; every interface reaches itself.
// Throws UnknownNameError if either endpoint is not declared.
bool reachable(const CommonRepresentation& cr, const InterfaceId& src,
               const InterfaceId& dst);

std::ostream& operator<<(std::ostream& os, Mode mode);
std::ostream& operator<<(std::ostream& os, const InterfaceId& id);
std::ostream& operator<<(std::ostream& os, const Flow& flow);
std::ostream& operator<<(std::ostream& os, const CommonRepresentation& cr);
std::ostream& operator<<(std::ostream& os, GrantResult result);

}  // namespace crflow

#endif  // CRFLOW_CR_H_
