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

// Named example policies and CRs shared by unit and acceptance tests.

#ifndef CRFLOW_TESTS_SUPPORT_FIXTURES_H_
#define CRFLOW_TESTS_SUPPORT_FIXTURES_H_

#include "crflow/cr.h"
#include "crflow/translate.h"
#include "support/generators.h"

namespace crflow::testing {

// Access control matrix
//        o1  o2  o3
//   s1   r   w   rw
//   s2   -   w   r
//   s3   rw  -   r
inline AclPolicy sample_acl() {
  constexpr Mode R = Mode::kRead;
  constexpr Mode W = Mode::kWrite;
  return AclPolicy{{"o1", "o2", "o3"},
                   {"s1", "s2", "s3"},
                   {{"o1", {{"s1", R}, {"s3", R}, {"s3", W}}},
                    {"o2", {{"s1", W}, {"s2", W}}},
                    {"o3", {{"s1", R}, {"s1", W}, {"s2", R}, {"s3", R}}}}};
}

inline CapabilityPolicy sample_capabilities() {
  constexpr Mode R = Mode::kRead;
  constexpr Mode W = Mode::kWrite;
  return CapabilityPolicy{{"o1", "o2", "o3"},
                          {"s1", "s2", "s3"},
                          {{"s1", {{"o1", R}, {"o2", W}, {"o3", R}, {"o3", W}}},
                           {"s2", {{"o2", W}, {"o3", R}}},
                           {"s3", {{"o1", R}, {"o1", W}, {"o3", R}}}}};
}

// Two CRs over partly shared interfaces whose only conflict is (a, c).
inline CommonRepresentation conflict_example_first() {
  return Cr({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
}
inline CommonRepresentation conflict_example_second() {
  return Cr({"a", "c", "d"}, {{"a", "d"}, {"d", "c"}});
}

// Conflicts (x,y),(y,x) are both complementary flows of the first CR.
inline CommonRepresentation complementary_first() {
  return Cr({"x", "y"}, {{"x", "y"}, {"y", "x"}});
}
inline CommonRepresentation complementary_second() {
  return Cr({"x", "y"}, {});
}

// Opposing one-way flows; append keeps whichever comes first.
inline CommonRepresentation opposing_first() {
  return Cr({"x", "y"}, {{"x", "y"}});
}
inline CommonRepresentation opposing_second() {
  return Cr({"x", "y"}, {{"y", "x"}});
}

}  // namespace crflow::testing

#endif  // CRFLOW_TESTS_SUPPORT_FIXTURES_H_
