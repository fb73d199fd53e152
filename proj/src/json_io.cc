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

#include "crflow/json_io.h"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "crflow/errors.h"

namespace crflow {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string type_name(const Json& json) { return json.type_name(); }

// Reads one JSON object, tracking its path for error messages and rejecting
// fields outside the allowed set.
class ObjectReader {
 public:
  ObjectReader(const Json& json, std::string path,
               std::initializer_list<std::string_view> allowed)
      : json_(json), path_(std::move(path)) {
    if (!json_.is_object()) {
      throw ParseError(where() + ": expected object, got " + type_name(json_));
    }
    for (const auto& [key, value] : json_.items()) {
      bool known = false;
      for (auto name : allowed) known = known || key == name;
      if (!known) throw ParseError(field(key) + ": unknown field");
    }
  }

  std::string field(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const Json& require(std::string_view key) const {
    auto it = json_.find(std::string(key));
    if (it == json_.end()) throw ParseError(field(key) + ": missing field");
    return *it;
  }

  std::string string(std::string_view key) const {
    return as_string(require(key), field(key));
  }

  const Json& array(std::string_view key) const {
    const Json& value = require(key);
    if (!value.is_array()) {
      throw ParseError(field(key) + ": expected array, got " +
                       type_name(value));
    }
    return value;
  }

  const Json& object(std::string_view key) const {
    const Json& value = require(key);
    if (!value.is_object()) {
      throw ParseError(field(key) + ": expected object, got " +
                       type_name(value));
    }
    return value;
  }

  static std::string as_string(const Json& value, const std::string& path) {
    if (!value.is_string()) {
      throw ParseError(path + ": expected string, got " + type_name(value));
    }
    return value.get<std::string>();
  }

 private:
  std::string where() const { return path_.empty() ? "document" : path_; }

  const Json& json_;
  std::string path_;
};

std::string indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

Mode mode_from_json(const Json& json, const std::string& path) {
  auto text = ObjectReader::as_string(json, path);
  if (text == "R") return Mode::kRead;
  if (text == "W") return Mode::kWrite;
  throw ParseError(path + ": expected \"R\" or \"W\", got \"" + text + "\"");
}

InterfaceId interface_at(const Json& json, const std::string& path) {
  ObjectReader kind_probe(json, path,
                          {"kind", "entity", "mode", "agent", "label"});
  auto kind = kind_probe.string("kind");
  if (kind == "explicit") {
    ObjectReader r(json, path, {"kind", "entity", "mode"});
    return InterfaceId::Explicit(
        r.string("entity"), mode_from_json(r.require("mode"), r.field("mode")));
  }
  if (kind == "implicit") {
    ObjectReader r(json, path, {"kind", "agent", "label"});
    return InterfaceId::Implicit(r.string("agent"), r.string("label"));
  }
  throw ParseError(kind_probe.field("kind") +
                   ": expected \"explicit\" or \"implicit\", got \"" + kind +
                   "\"");
}

NameSet names_at(const ObjectReader& r, std::string_view key) {
  NameSet names;
  const Json& list = r.array(key);
  for (std::size_t i = 0; i < list.size(); ++i) {
    names.insert(ObjectReader::as_string(list[i], indexed(r.field(key), i)));
  }
  return names;
}

std::set<NamePair> pairs_at(const ObjectReader& r, std::string_view key) {
  std::set<NamePair> pairs;
  const Json& list = r.array(key);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = indexed(r.field(key), i);
    const Json& pair = list[i];
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError(path + ": expected a two-element array");
    }
    pairs.emplace(ObjectReader::as_string(pair[0], path + "[0]"),
                  ObjectReader::as_string(pair[1], path + "[1]"));
  }
  return pairs;
}

// {"key": [{"<name_field>": "...", "mode": "R"}, ...], ...}
std::map<std::string, PermissionSet> permissions_at(
    const ObjectReader& r, std::string_view key, std::string_view name_field) {
  std::map<std::string, PermissionSet> out;
  for (const auto& [owner, list] : r.object(key).items()) {
    const std::string owner_path = r.field(key) + "." + owner;
    if (!list.is_array()) {
      throw ParseError(owner_path + ": expected array, got " + type_name(list));
    }
    auto& set = out[owner];
    for (std::size_t i = 0; i < list.size(); ++i) {
      ObjectReader entry(list[i], indexed(owner_path, i), {name_field, "mode"});
      set.insert(Permission{
          entry.string(name_field),
          mode_from_json(entry.require("mode"), entry.field("mode"))});
    }
  }
  return out;
}

Condition condition_at(const Json& json, const std::string& path,
                       std::size_t depth) {
  if (depth > Condition::kMaxDepth) {
    throw ValidationError(path + ": condition nesting exceeds " +
                          std::to_string(Condition::kMaxDepth));
  }
  ObjectReader probe(json, path, {"kind", "side", "n", "all", "condition"});
  auto kind = probe.string("kind");
  if (kind == "no-conflicts") {
    ObjectReader r(json, path, {"kind"});
    return Condition(condition::NoConflicts{});
  }
  if (kind == "conflicts-complementary-in") {
    ObjectReader r(json, path, {"kind", "side"});
    auto side = r.string("side");
    if (side != "first" && side != "second") {
      throw ParseError(r.field("side") +
                       ": expected \"first\" or \"second\", got \"" + side +
                       "\"");
    }
    return Condition(condition::ConflictsComplementaryIn{
        side == "first" ? Side::kFirst : Side::kSecond});
  }
  if (kind == "conflict-count-at-most") {
    ObjectReader r(json, path, {"kind", "n"});
    const Json& n = r.require("n");
    if (!n.is_number_unsigned()) {
      throw ParseError(r.field("n") + ": expected non-negative integer");
    }
    return Condition(condition::ConflictCountAtMost{n.get<std::size_t>()});
  }
  if (kind == "and") {
    ObjectReader r(json, path, {"kind", "all"});
    const Json& list = r.array("all");
    std::vector<Condition> all;
    for (std::size_t i = 0; i < list.size(); ++i) {
      all.push_back(
          condition_at(list[i], indexed(r.field("all"), i), depth + 1));
    }
    if (all.empty()) throw ValidationError(r.field("all") + ": empty 'and'");
    return Condition::all_of(std::move(all));
  }
  if (kind == "not") {
    ObjectReader r(json, path, {"kind", "condition"});
    return Condition::negate(
        condition_at(r.require("condition"), r.field("condition"), depth + 1));
  }
  throw ParseError(probe.field("kind") + ": unknown condition kind \"" + kind +
                   "\"");
}

Action action_at(const ObjectReader& r, std::string_view key) {
  auto text = r.string(key);
  try {
    return parse_action(text);
  } catch (const ParseError&) {
    throw ParseError(r.field(key) + ": unknown action \"" + text + "\"");
  }
}

}  // namespace

Json to_json(const InterfaceId& id) {
  if (const auto* port = id.explicit_port()) {
    return Json{{"kind", "explicit"},
                {"entity", port->entity},
                {"mode", std::string(mode_name(port->mode))}};
  }
  const auto* port = id.implicit_port();
  return Json{
      {"kind", "implicit"}, {"agent", port->agent}, {"label", port->label}};
}

Json to_json(const Flow& flow) {
  return Json{{"from", to_json(flow.from())}, {"to", to_json(flow.to())}};
}

Json to_json(const FlowSet& flows) {
  Json out = Json::array();
  for (const auto& f : flows) out.push_back(to_json(f));
  return out;
}

Json to_json(const CommonRepresentation& cr) {
  Json interfaces = Json::array();
  for (const auto& id : cr.interfaces()) interfaces.push_back(to_json(id));
  return Json{{"interfaces", std::move(interfaces)},
              {"flows", to_json(cr.flows())}};
}

Json to_json(const Condition& condition) {
  return std::visit(
      Overloaded{
          [](const condition::NoConflicts&) {
            return Json{{"kind", "no-conflicts"}};
          },
          [](const condition::ConflictsComplementaryIn& c) {
            return Json{{"kind", "conflicts-complementary-in"},
                        {"side", c.side == Side::kFirst ? "first" : "second"}};
          },
          [](const condition::ConflictCountAtMost& c) {
            return Json{{"kind", "conflict-count-at-most"}, {"n", c.n}};
          },
          [](const condition::And& c) {
            Json all = Json::array();
            for (const auto& child : c.all) all.push_back(to_json(child));
            return Json{{"kind", "and"}, {"all", std::move(all)}};
          },
          [](const condition::Not& c) {
            return Json{{"kind", "not"}, {"condition", to_json(*c.inner)}};
          },
      },
      condition.variant());
}

Json to_json(const CompositionRule& rule) {
  return Json{{"condition", to_json(rule.condition())},
              {"then", std::string(action_name(rule.then_action()))},
              {"else", std::string(action_name(rule.else_action()))}};
}

Json to_json(const CompositionDecision& decision) {
  return Json{
      {"condition_held", decision.condition_held},
      {"action", std::string(action_name(decision.action_taken))},
      {"evidence", to_json(decision.evidence)},
      {"result", decision.result ? to_json(*decision.result) : Json(nullptr)}};
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

std::string dump_cr(const CommonRepresentation& cr) {
  return dump(to_json(cr));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

InterfaceId interface_from_json(const Json& json) {
  return interface_at(json, "interface");
}

CommonRepresentation cr_from_json(const Json& json) {
  ObjectReader r(json, "", {"interfaces", "flows"});
  InterfaceSet interfaces;
  const Json& ids = r.array("interfaces");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    interfaces.insert(interface_at(ids[i], indexed("interfaces", i)));
  }
  FlowSet flows;
  const Json& edges = r.array("flows");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = indexed("flows", i);
    ObjectReader edge(edges[i], path, {"from", "to"});
    auto from = interface_at(edge.require("from"), edge.field("from"));
    auto to = interface_at(edge.require("to"), edge.field("to"));
    if (from == to) {
      throw ValidationError(path + ": self-flow on " + from.to_string());
    }
    flows.emplace(std::move(from), std::move(to));
  }
  CommonRepresentation cr(std::move(interfaces), std::move(flows));
  require_valid(cr);
  return cr;
}

CommonRepresentation parse_cr(std::string_view text) {
  return cr_from_json(parse_json(text));
}

SourcePolicy policy_from_json(const Json& json) {
  ObjectReader probe(
      json, "",
      {"kind", "objects", "subjects", "entries", "labels", "order", "entities",
       "labelling", "roles", "assignments", "hierarchy"});
  auto kind = probe.string("kind");
  if (kind == "acl") {
    ObjectReader r(json, "", {"kind", "objects", "subjects", "entries"});
    AclPolicy p{names_at(r, "objects"), names_at(r, "subjects"),
                permissions_at(r, "entries", "subject")};
    validate_policy(p);
    return p;
  }
  if (kind == "capabilities") {
    ObjectReader r(json, "", {"kind", "objects", "subjects", "entries"});
    CapabilityPolicy p{names_at(r, "objects"), names_at(r, "subjects"),
                       permissions_at(r, "entries", "object")};
    validate_policy(p);
    return p;
  }
  if (kind == "lbac") {
    ObjectReader r(json, "",
                   {"kind", "labels", "order", "entities", "labelling"});
    LatticePolicy p{names_at(r, "labels"),
                    pairs_at(r, "order"),
                    names_at(r, "entities"),
                    {}};
    for (const auto& [entity, label] : r.object("labelling").items()) {
      p.labelling[entity] =
          ObjectReader::as_string(label, r.field("labelling") + "." + entity);
    }
    validate_policy(p);
    return p;
  }
  if (kind == "rbac") {
    ObjectReader r(json, "", {"kind", "roles", "assignments", "hierarchy"});
    RbacPolicy p{names_at(r, "roles"),
                 permissions_at(r, "assignments", "object"),
                 pairs_at(r, "hierarchy")};
    validate_policy(p);
    return p;
  }
  throw ParseError(
      "kind: expected \"acl\", \"capabilities\", \"lbac\" or "
      "\"rbac\", got \"" +
      kind + "\"");
}

SourcePolicy parse_policy(std::string_view text) {
  return policy_from_json(parse_json(text));
}

Condition condition_from_json(const Json& json) {
  return condition_at(json, "condition", 1);
}

CompositionRule rule_from_json(const Json& json) {
  ObjectReader r(json, "", {"condition", "then", "else"});
  return CompositionRule(condition_at(r.require("condition"), "condition", 1),
                         action_at(r, "then"), action_at(r, "else"));
}

CompositionRule parse_rule(std::string_view text) {
  return rule_from_json(parse_json(text));
}

}  // namespace crflow
