// Copyright 2026 The corrpoly Authors
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

namespace corrpoly {

// Base of every exception thrown by the library. The C API maps each
// subclass onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, out-of-range weights, duplicate keys.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Vectors or matrices whose shapes disagree with the system they belong to.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A request whose combinatorial size exceeds a configured cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// Arithmetic or precondition failures (division by zero, decomposing an
// outside point, lookups of unknown keys).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Lookup of a key the dataset does not contain.
class NotFoundError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Files that cannot be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// A solver result failed its own exact re-verification. Never expected.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace corrpoly
