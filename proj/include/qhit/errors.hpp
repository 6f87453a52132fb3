// Copyright 2026 The qhit Authors
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

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// shapes do not line up
class DimensionError : public Error {
 public:
  using Error::Error;
};

// input is not a density / channel / projector etc.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// bad user parameter (p outside [0,1], degenerate pairing, ...)
class ParameterError : public Error {
 public:
  using Error::Error;
};

// 1 in the spectrum of something that has to be inverted
class SpectralObstruction : public Error {
 public:
  SpectralObstruction(const std::string& what, std::vector<std::complex<double>> offending)
      : Error(what), offending_(std::move(offending)) {}
  const std::vector<std::complex<double>>& offending() const { return offending_; }

 private:
  std::vector<std::complex<double>> offending_;
};

// fixed space is not one dimensional / no faithful state
class ReducibleError : public Error {
 public:
  using Error::Error;
};

// index >= 2, no group inverse
class NoGroupInverse : public Error {
 public:
  NoGroupInverse(const std::string& what, int index) : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// singular solve, failed extrapolation, ...
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhit
