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

// Compositionality rules: a condition over the conflicts between two CRs
// selects how they are combined. The canonical rule is
//
//   if every conflict f of (A, B) has its inverse among the flows of A
//   then merge(A, B) else append(A, B)
//
// which admits B only where its disagreements with A are the missing halves
// of bidirectional exchanges A already allows.

#ifndef CRFLOW_METAPOLICY_H_
#define CRFLOW_METAPOLICY_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "crflow/cr.h"

namespace crflow {

enum class Side { kFirst, kSecond };

enum class Action { kMerge, kAppend, kAppendStrict, kReject };

// "merge", "append", "append-strict", "reject".
std::string_view action_name(Action action);
Action parse_action(std::string_view text);  // throws ParseError

class Condition;

namespace condition {

struct NoConflicts {};

// Every conflict's inverse is a flow of the given side. Vacuously true when
// there are no conflicts.
struct ConflictsComplementaryIn {
  Side side;
};

struct ConflictCountAtMost {
  std::size_t n;
};

struct And {
  std::vector<Condition> all;  // non-empty
};

struct Not {
  std::shared_ptr<const Condition> inner;
};

}  // namespace condition

class Condition {
 public:
  using Variant =
      std::variant<condition::NoConflicts, condition::ConflictsComplementaryIn,
                   condition::ConflictCountAtMost, condition::And,
                   condition::Not>;

  static constexpr std::size_t kMaxDepth = 16;

  // Throws ValidationError for an empty And, a null Not, or nesting deeper
  // than kMaxDepth.
  Condition(Variant v);  // NOLINT(google-explicit-constructor)
  template <typename T>
    requires std::is_constructible_v<Variant, T&&> &&
             (!std::is_same_v<std::remove_cvref_t<T>, Variant>) &&
             (!std::is_same_v<std::remove_cvref_t<T>, Condition>)
  Condition(T&& alternative)  // NOLINT(google-explicit-constructor)
      : Condition(Variant(std::forward<T>(alternative))) {}

  static Condition negate(Condition inner) {
    return Condition(
        condition::Not{std::make_shared<const Condition>(std::move(inner))});
  }
  static Condition all_of(std::vector<Condition> all) {
    return Condition(condition::And{std::move(all)});
  }

  const Variant& variant() const { return v_; }

  // 1 for a leaf.
  std::size_t depth() const { return depth_; }

 private:
  Variant v_;
  std::size_t depth_ = 1;
};

// Throws ValidationError if then_action == else_action.
class CompositionRule {
 public:
  CompositionRule(Condition condition, Action then_action, Action else_action);

  const Condition& condition() const { return condition_; }
  Action then_action() const { return then_; }
  Action else_action() const { return else_; }

 private:
  Condition condition_;
  Action then_;
  Action else_;
};

struct CompositionDecision {
  bool condition_held;
  Action action_taken;
  std::optional<CommonRepresentation> result;  // empty iff kReject
  FlowSet evidence;                            // conflicts(a, b)
};

bool eval_condition(const Condition& c, const CommonRepresentation& a,
                    const CommonRepresentation& b);

CommonRepresentation perform(Action action, const CommonRepresentation& a,
                             const CommonRepresentation& b);

CompositionDecision apply_rule(const CompositionRule& rule,
                               const CommonRepresentation& a,
                               const CommonRepresentation& b);

}  // namespace crflow

#endif  // CRFLOW_METAPOLICY_H_
