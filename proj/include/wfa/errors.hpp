// Copyright 2026 The wfa-aak Authors.
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

namespace wfa {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: shape mismatches, symbols out of range, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// Arguments that are well formed but numerically degenerate for the
// requested operation (non-minimal automata, zero singular values).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Failures of a numerical routine (eigen-solvers, singular systems).
class NumericError : public Error {
 public:
  using Error::Error;
};

// A series or fixed-point iteration that cannot converge because the
// relevant spectral radius is >= 1.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, double spectral_radius)
      : NumericError(what), spectral_radius_(spectral_radius) {}

  double spectral_radius() const noexcept { return spectral_radius_; }

 private:
  double spectral_radius_;
};

// An operation on a truncated Fock space would need basis vectors beyond
// the degree bound.
class TruncationError : public Error {
 public:
  using Error::Error;
};

}  // namespace wfa
