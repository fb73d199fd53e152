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

#ifndef CRFLOW_DOT_H_
#define CRFLOW_DOT_H_

#include <string>

#include "crflow/cr.h"

namespace crflow {

// Graphviz digraph with one node per interface (named as in
// InterfaceId::to_string) and one edge per flow, both in canonical order.
std::string to_dot(const CommonRepresentation& cr);

}  // namespace crflow

#endif  // CRFLOW_DOT_H_
