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

#include "crflow/metapolicy.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "crflow/analyze.h"
#include "crflow/compose.h"
#include "crflow/errors.h"

namespace crflow {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t depth_of(const Condition::Variant& v) {
  return std::visit(
      Overloaded{
          [](const condition::And& c) {
            std::size_t deepest = 0;
            for (const auto& child : c.all) {
              deepest = std::max(deepest, child.depth());
            }
            return deepest + 1;
          },
          [](const condition::Not& c) { return c.inner->depth() + 1; },
          [](const auto&) -> std::size_t { return 1; },
      },
      v);
}

bool evaluate(const Condition& c, const CommonRepresentation& a,
              const CommonRepresentation& b, const FlowSet& conflict_set) {
  return std::visit(
      Overloaded{
          [&](const condition::NoConflicts&) { return conflict_set.empty(); },
          [&](const condition::ConflictsComplementaryIn& c) {
            const auto& side = c.side == Side::kFirst ? a : b;
            return std::ranges::all_of(conflict_set, [&](const Flow& f) {
              return side.has_flow(f.inverse());
            });
          },
          [&](const condition::ConflictCountAtMost& c) {
            return conflict_set.size() <= c.n;
          },
          [&](const condition::And& c) {
            return std::ranges::all_of(c.all, [&](const Condition& child) {
              return evaluate(child, a, b, conflict_set);
            });
          },
          [&](const condition::Not& c) {
            return !evaluate(*c.inner, a, b, conflict_set);
          },
      },
      c.variant());
}

}  // namespace

std::string_view action_name(Action action) {
  switch (action) {
    case Action::kMerge:
      return "merge";
    case Action::kAppend:
      return "append";
    case Action::kAppendStrict:
      return "append-strict";
    case Action::kReject:
      return "reject";
  }
  return "reject";
}

Action parse_action(std::string_view text) {
  for (auto action : {Action::kMerge, Action::kAppend, Action::kAppendStrict,
                      Action::kReject}) {
    if (text == action_name(action)) return action;
  }
  throw ParseError("unknown action '" + std::string(text) + "'");
}

Condition::Condition(Variant v) : v_(std::move(v)) {
  if (const auto* c = std::get_if<condition::And>(&v_); c && c->all.empty()) {
    throw ValidationError("condition: 'and' needs at least one operand");
  }
  if (const auto* c = std::get_if<condition::Not>(&v_); c && !c->inner) {
    throw ValidationError("condition: 'not' needs an operand");
  }
  depth_ = depth_of(v_);
  if (depth_ > kMaxDepth) {
    throw ValidationError("condition: nesting depth " + std::to_string(depth_) +
                          " exceeds " + std::to_string(kMaxDepth));
  }
}

CompositionRule::CompositionRule(Condition condition, Action then_action,
                                 Action else_action)
    : condition_(std::move(condition)), then_(then_action), else_(else_action) {
  if (then_ == else_) {
    throw ValidationError("rule: 'then' and 'else' must differ (both are " +
                          std::string(action_name(then_)) + ")");
  }
}

bool eval_condition(const Condition& c, const CommonRepresentation& a,
                    const CommonRepresentation& b) {
  return evaluate(c, a, b, conflicts(a, b));
}

CommonRepresentation perform(Action action, const CommonRepresentation& a,
                             const CommonRepresentation& b) {
  switch (action) {
    case Action::kMerge:
      return merge(a, b);
    case Action::kAppend:
      return append(a, b);
    case Action::kAppendStrict:
      return append_strict(a, b);
    case Action::kReject:
      break;
  }
  throw std::invalid_argument("reject does not produce a CR");
}

CompositionDecision apply_rule(const CompositionRule& rule,
                               const CommonRepresentation& a,
                               const CommonRepresentation& b) {
  CompositionDecision decision;
  decision.evidence = conflicts(a, b);
  decision.condition_held = evaluate(rule.condition(), a, b, decision.evidence);
  decision.action_taken =
      decision.condition_held ? rule.then_action() : rule.else_action();
  if (decision.action_taken != Action::kReject) {
    decision.result = perform(decision.action_taken, a, b);
  }
  return decision;
}

}  // namespace crflow
