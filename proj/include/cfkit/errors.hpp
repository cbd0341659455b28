// Copyright 2026 The cfkit Authors
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

#ifndef CFKIT_ERRORS_HPP
#define CFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfkit {

/// Base class for all cfkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input (bad document, bad flag value). Carries the name of
/// the offending field so the CLI can report it.
class InputError : public Error {
 public:
  InputError(std::string field, const std::string& what)
      : Error("field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The computed sectioning modulus exceeds the configured cap.
class ModulusCapError : public Error {
 public:
  using Error::Error;
};

/// Interval computations ran out of precision below the configured cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A configured wall-clock budget was exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal self-check failed. These indicate a bug or a violated caller
/// precondition, never a property of valid input; they must abort the
/// operation rather than let a wrong value escape.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfkit

#endif  // CFKIT_ERRORS_HPP
