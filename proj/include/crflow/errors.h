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

#ifndef CRFLOW_ERRORS_H_
#define CRFLOW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace crflow {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input document could not be read or does not have the expected shape
// (malformed JSON, missing or unknown fields, wrong value types).
class ParseError : public Error {
 public:
  using Error::Error;
};

// The input is well-shaped but breaks a model invariant, e.g. a flow with an
// undeclared endpoint or a cyclic role hierarchy.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A query named an interface, label or role the model does not declare.
class UnknownNameError : public Error {
 public:
  UnknownNameError(std::string what_kind, std::string name)
      : Error("unknown " + what_kind + " '" + name + "'"),
        kind_(std::move(what_kind)),
        name_(std::move(name)) {}

  const std::string& kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  std::string kind_;
  std::string name_;
};

}  // namespace crflow

#endif  // CRFLOW_ERRORS_H_
