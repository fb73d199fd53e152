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

#include "crflow/closure.h"

namespace crflow {

ReachabilityMatrix warshall_closure(
    std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  ReachabilityMatrix m(n);
  for (auto [i, j] : edges) m.set(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m.test(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m.test(k, j)) m.set(i, j);
      }
    }
  }
  return m;
}

}  // namespace crflow
