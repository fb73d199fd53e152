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

#include "crflow/dot.h"

#include <sstream>

namespace crflow {
namespace {

std::string quoted(const InterfaceId& id) {
  std::string out = "\"";
  for (char c : id.to_string()) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const CommonRepresentation& cr) {
  std::ostringstream os;
  os << "digraph cr {\n";
  for (const auto& id : cr.interfaces()) {
    os << "  " << quoted(id);
    if (id.is_implicit())
      os << " [shape=ellipse]";
    else
      os << " [shape=box]";
    os << ";\n";
  }
  for (const auto& f : cr.flows()) {
    os << "  " << quoted(f.from()) << " -> " << quoted(f.to()) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace crflow
