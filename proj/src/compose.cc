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

#include "crflow/compose.h"

#include <stdexcept>

namespace crflow {
namespace {

InterfaceSet united(const InterfaceSet& a, const InterfaceSet& b) {
  InterfaceSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

template <typename Admit>
CommonRepresentation priority_composite(const CommonRepresentation& a,
                                        const CommonRepresentation& b,
                                        Admit admit) {
  FlowSet flows = a.flows();
  for (const auto& f : b.flows()) {
    if (!a.has_flow(f) && !a.has_flow(f.inverse()) && admit(f)) {
      flows.insert(f);
    }
  }
  return CommonRepresentation(united(a.interfaces(), b.interfaces()),
                              std::move(flows));
}

template <typename Op>
CommonRepresentation fold(std::span<const CommonRepresentation> crs, Op op) {
  if (crs.empty()) {
    throw std::invalid_argument("composition needs at least one CR");
  }
  CommonRepresentation acc = crs.front();
  for (const auto& cr : crs.subspan(1)) acc = op(acc, cr);
  return acc;
}

}  // namespace

CommonRepresentation merge(const CommonRepresentation& a,
                           const CommonRepresentation& b) {
  FlowSet flows = a.flows();
  flows.insert(b.flows().begin(), b.flows().end());
  return CommonRepresentation(united(a.interfaces(), b.interfaces()),
                              std::move(flows));
}

CommonRepresentation append(const CommonRepresentation& a,
                            const CommonRepresentation& b) {
  return priority_composite(a, b, [](const Flow&) { return true; });
}

CommonRepresentation append_strict(const CommonRepresentation& a,
                                   const CommonRepresentation& b) {
  return priority_composite(a, b, [&a](const Flow& f) {
    return !(a.has_interface(f.from()) && a.has_interface(f.to()));
  });
}

CommonRepresentation merge_all(std::span<const CommonRepresentation> crs) {
  return fold(crs, merge);
}

CommonRepresentation append_all(std::span<const CommonRepresentation> crs) {
  return fold(crs, append);
}

CommonRepresentation append_strict_all(
    std::span<const CommonRepresentation> crs) {
  return fold(crs, append_strict);
}

}  // namespace crflow
