// Copyright 2026 The v2vsig Authors
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

namespace v2vsig {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of a function (e.g. p(d) with d > 1).
class InputError : public Error {
 public:
  using Error::Error;
};

// A value to invert lies outside the codomain of the curve.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Game parameters (beta, y, r) or a behavior profile violate their bounds.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A hazard or signal-reach curve is not admissible.
class CurveError : public Error {
 public:
  using Error::Error;
};

// Posterior after "no signal" is 0/0: every V2V car is certain to be warned.
class DegenerateSignalError : public Error {
 public:
  using Error::Error;
};

// A closed form disagrees with its own region's guarantees. Indicates a bug
// or a misclassified game, never bad user input.
class LogicError : public Error {
 public:
  using Error::Error;
};

}  // namespace v2vsig
