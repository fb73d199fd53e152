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

#include "crflow/analyze.h"

#include <algorithm>
#include <iterator>

namespace crflow {
namespace {

bool over_shared(const Flow& f, const CommonRepresentation& a,
                 const CommonRepresentation& b) {
  return a.has_interface(f.from()) && a.has_interface(f.to()) &&
         b.has_interface(f.from()) && b.has_interface(f.to());
}

}  // namespace

FlowSet conflicts(const CommonRepresentation& a,
                  const CommonRepresentation& b) {
  FlowSet out;
  for (const auto& f : diffs(a, b)) {
    if (over_shared(f, a, b)) out.insert(f);
  }
  return out;
}

FlowSet one_sided_conflicts(const CommonRepresentation& a,
                            const CommonRepresentation& b) {
  FlowSet out;
  for (const auto& f : a.flows()) {
    if (!b.has_flow(f) && over_shared(f, a, b)) out.insert(f);
  }
  return out;
}

bool conflicting(const CommonRepresentation& a, const CommonRepresentation& b) {
  return !conflicts(a, b).empty();
}

FlowSet common_flows(const CommonRepresentation& a,
                     const CommonRepresentation& b) {
  FlowSet out;
  std::ranges::set_intersection(a.flows(), b.flows(),
                                std::inserter(out, out.end()));
  return out;
}

FlowSet diffs(const CommonRepresentation& a, const CommonRepresentation& b) {
  FlowSet out;
  std::ranges::set_symmetric_difference(a.flows(), b.flows(),
                                        std::inserter(out, out.end()));
  return out;
}

}  // namespace crflow
