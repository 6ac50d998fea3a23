// Copyright 2026 The permadd Authors
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

namespace permadd {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
    using Error::Error;
};

/// Operands belong to different fields, groups, algebras or codes.
class ContextMismatch : public Error {
 public:
    using Error::Error;
};

/// A desk-scale size guard was exceeded (table too large to build).
class GuardExceeded : public Error {
 public:
    using Error::Error;
};

/// A constructive solver could not produce a verified result.
class ConstructionFailure : public Error {
 public:
    using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
    using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidArgument(what);
}

}  // namespace detail
}  // namespace permadd
