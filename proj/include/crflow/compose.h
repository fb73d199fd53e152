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

// Composition of CRs. Interface names are assumed to be globally consistent:
// the same name in two CRs denotes the same interface.

#ifndef CRFLOW_COMPOSE_H_
#define CRFLOW_COMPOSE_H_

#include <span>

#include "crflow/cr.h"

namespace crflow {

// Simple composite: component-wise union. Permit-favouring.
CommonRepresentation merge(const CommonRepresentation& a,
                           const CommonRepresentation& b);

// Priority composite, deny-favouring: every flow of `a` survives; a flow f of
// `b` survives only if neither f nor its inverse is a flow of `a`.
CommonRepresentation append(const CommonRepresentation& a,
                            const CommonRepresentation& b);

// Like append(), but additionally drops any flow of `b` whose endpoints are
// both interfaces of `a`, so `b` cannot add flows among existing interfaces.
CommonRepresentation append_strict(const CommonRepresentation& a,
                                   const CommonRepresentation& b);

// Left folds. Throw std::invalid_argument on an empty sequence.
CommonRepresentation merge_all(std::span<const CommonRepresentation> crs);
CommonRepresentation append_all(std::span<const CommonRepresentation> crs);
CommonRepresentation append_strict_all(
    std::span<const CommonRepresentation> crs);

}  // namespace crflow

#endif  // CRFLOW_COMPOSE_H_
