// Copyright 2026 The rckit Authors
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

namespace rckit {

// Bad inputs, malformed circuits/models, violated preconditions.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A hard cycle contains a non-Clifford gate, so tableau conjugation cannot
// be used; callers may fall back to dense conjugation.
struct UnsupportedConjugationError : std::runtime_error {
  explicit UnsupportedConjugationError(const std::string& what) : std::runtime_error(what) {}
};

// A hard cycle is neither Clifford nor a tensor of single-qubit gates.
struct UnsupportedHardCycleError : std::runtime_error {
  explicit UnsupportedHardCycleError(const std::string& what) : std::runtime_error(what) {}
};

// Channel fit did not reach the success threshold; carries the best residual.
struct FitFailedError : std::runtime_error {
  FitFailedError(const std::string& what, double best_residual)
      : std::runtime_error(what), residual(best_residual) {}
  double residual;
};

}  // namespace rckit
