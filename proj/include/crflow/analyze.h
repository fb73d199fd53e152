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

// Conflict and difference analysis between two CRs.

#ifndef CRFLOW_ANALYZE_H_
#define CRFLOW_ANALYZE_H_

#include "crflow/cr.h"

namespace crflow {

// Flows between interfaces declared by both CRs that exactly one of them
// contains. Symmetric in its arguments.
FlowSet conflicts(const CommonRepresentation& a, const CommonRepresentation& b);

// conflicts(a, b) restricted to flows that `a` permits and `b` does not.
FlowSet one_sided_conflicts(const CommonRepresentation& a,
                            const CommonRepresentation& b);

bool conflicting(const CommonRepresentation& a, const CommonRepresentation& b);

// Intersection of the flow sets.
FlowSet common_flows(const CommonRepresentation& a,
                     const CommonRepresentation& b);

// Symmetric difference of the flow sets, over all interfaces.
FlowSet diffs(const CommonRepresentation& a, const CommonRepresentation& b);

}  // namespace crflow

#endif  // CRFLOW_ANALYZE_H_
