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

#include <Eigen/Dense>

#include "qhit/errors.hpp"

namespace qhit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// absolute entrywise tolerance used by comparisons unless overridden
inline constexpr double kDefaultTol = 1e-10;

// row stacking: [[a, b], [c, d]] -> [a, b, c, d]
Vector vec(const Matrix& x);
Matrix unvec(const Vector& v, Index rows, Index cols);

Matrix kron(const Matrix& a, const Matrix& b);

// vec(I_n)
Vector vec_identity(Index n);

bool all_finite(const Matrix& m);
double max_abs(const Matrix& m);
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

// Matrix representation of a linear map on n x n matrices.
class SuperOp {
 public:
  SuperOp() = default;
  SuperOp(Index dim, Matrix mat);

  static SuperOp identity(Index dim);
  static SuperOp zero(Index dim);
  // X -> B X B*
  static SuperOp conjugation(const Matrix& b);

  Index dim() const { return dim_; }
  const Matrix& mat() const { return mat_; }

  Matrix apply(const Matrix& x) const;

 private:
  Index dim_ = 0;
  Matrix mat_;
};

SuperOp compose(const SuperOp& s1, const SuperOp& s2);  // s1 after s2
SuperOp add(const SuperOp& s1, const SuperOp& s2);
SuperOp scale(const SuperOp& s, Complex c);
SuperOp power(const SuperOp& s, int m);

bool approx_equal(const SuperOp& a, const SuperOp& b, double tol = kDefaultTol);

}  // namespace qhit
