// Copyright 2026 The reseng Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace reseng {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x outside [0,1], d too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold. `field` names the offending input.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Inputs of mismatched dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// The two baths coincide (or a closed-form denominator vanishes).
class DegenerateEngineError : public Error {
 public:
  using Error::Error;
};

// The unitary pattern makes the requested product impossible.
class StructuralImpossibility : public Error {
 public:
  using Error::Error;
};

// Randomised construction exhausted its retry budget.
class RetryExhausted : public Error {
 public:
  RetryExhausted(const std::string& what, unsigned long long seed)
      : Error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  unsigned long long seed() const noexcept { return seed_; }

 private:
  unsigned long long seed_;
};

}  // namespace reseng
