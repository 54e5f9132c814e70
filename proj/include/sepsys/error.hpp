// Copyright 2026 The Authors.
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

#ifndef SEPSYS_ERROR_HPP_
#define SEPSYS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sepsys {

enum class ErrorKind {
  kPrecondition,       // caller violated a documented precondition
  kInvalidInput,       // malformed files, matrices, decompositions
  kCapExceeded,        // exhaustive routine asked to run past its size cap
  kBudgetExceeded,     // enumeration budget exhausted
  kIterationCap,       // refinement loop tripwire
  kInternalInvariant,  // a proven property failed at runtime: a bug
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace sepsys

#endif  // SEPSYS_ERROR_HPP_
