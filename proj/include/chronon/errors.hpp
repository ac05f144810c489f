// Copyright 2026 The Chronon Authors
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

namespace chronon {

// Base class for all chronon failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible or not what the operation requires.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A matrix required to be Hermitian is not, beyond tolerance.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

// A state or effect has an eigenvalue below -1e-10.
class NotPositiveError : public Error {
 public:
  using Error::Error;
};

// A density matrix trace deviates from 1 by more than 1e-10.
class NotUnitTraceError : public Error {
 public:
  using Error::Error;
};

// POVM effects do not sum to the identity within tolerance.
class NotCompleteError : public Error {
 public:
  using Error::Error;
};

// An effect has an eigenvalue outside [-1e-10, 1 + 1e-10].
class EffectOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// A vector or weight sequence is not normalized within tolerance.
class NotNormalizedError : public Error {
 public:
  using Error::Error;
};

// Every time-marginal probability vanishes; no conditional exists.
class AllMarginalsZeroError : public Error {
 public:
  using Error::Error;
};

// Quadrature failed to converge at the permitted resolution, or a
// sampled profile cannot resolve the requested frequency.
class GridTooCoarseError : public Error {
 public:
  using Error::Error;
};

// The normalizing integral of a conditional expression is ~0.
class DenominatorVanishesError : public Error {
 public:
  using Error::Error;
};

// A window profile has zero weight at zero frequency, so the
// narrow-window normalization is undefined.
class FilterZeroAtOriginError : public Error {
 public:
  using Error::Error;
};

// Invalid or missing run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while reading or writing run outputs.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace chronon
