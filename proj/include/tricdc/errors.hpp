// Copyright 2026 The tricdc Authors
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

namespace tricdc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or subsystem dimensions do not fit together.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (non-Hermitian matrix,
/// unnormalized state, bad qubit index, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A state-family parameter is missing or outside its documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two numerical routes disagree, or a quantity that must be non-negative
/// came out materially negative.
class NumericConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A state document could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A state document names a family that is not in the registry.
class UnknownFamily : public ParseError {
 public:
  explicit UnknownFamily(const std::string& name)
      : ParseError("unknown state family '" + name + "'") {}
};

}  // namespace tricdc
