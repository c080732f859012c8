/*
 * Copyright 2026 The katd authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace katd {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different carriers (state count, alphabet or bound).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The model does not implement the requested operation (e.g. omega).
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured search-space cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A fixpoint iteration failed to stabilise within its bound, which can
/// only happen when the supplied transformer is not isotone.
class FixpointError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression or assignment handed to the law evaluator.
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace katd
