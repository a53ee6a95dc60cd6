// Copyright 2026 The heis-strips Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace heis {

// Bad arguments or malformed input (CLI exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the geometric input failed, e.g. an invalid strip or a
// stencil leaving the domain (CLI exit code 4).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Refinement or root finding did not converge (CLI exit code 3).
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double previous, double last)
      : std::runtime_error(what), previous_(previous), last_(last) {}
  explicit NumericError(const std::string& what)
      : NumericError(what, 0.0, 0.0) {}

  double previous() const { return previous_; }
  double last() const { return last_; }

 private:
  double previous_;
  double last_;
};

}  // namespace heis
