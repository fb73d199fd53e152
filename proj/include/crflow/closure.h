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

#ifndef CRFLOW_CLOSURE_H_
#define CRFLOW_CLOSURE_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace crflow {

// Dense boolean relation over vertices 0..n-1.
class ReachabilityMatrix {
 public:
  explicit ReachabilityMatrix(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j) { bits_[i * n_ + j] = true; }

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

// Warshall's algorithm: the transitive closure of the given edge list. The
// result is reflexive only where a cycle passes through the vertex.
ReachabilityMatrix warshall_closure(
    std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

}  // namespace crflow

#endif  // CRFLOW_CLOSURE_H_
