/* Copyright 2026 The salemlab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SALEMLAB_ERROR_HPP_
#define SALEMLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace salemlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularGram : public Error {
 public:
  SingularGram() : Error("Gram matrix is singular") {}
  using Error::Error;
};

class NotSalem : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (e.g. a model invariant or a
// non-integral involution). Indicates bad input data or a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace salemlab

#endif  // SALEMLAB_ERROR_HPP_
