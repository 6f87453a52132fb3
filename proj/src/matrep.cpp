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

#include "qhit/matrep.hpp"

#include <cmath>
#include <string>

namespace qhit {

namespace {

std::string shape(Index r, Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_dim(const SuperOp& a, const SuperOp& b, const char* op) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(op) + ": dims " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
}

}  // namespace

Vector vec(const Matrix& x) {
  Vector v(x.size());
  Index idx = 0;
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j) v(idx++) = x(i, j);
  return v;
}

Matrix unvec(const Vector& v, Index rows, Index cols) {
  if (rows < 0 || cols < 0 || v.size() != rows * cols)
    throw DimensionError("unvec: length " + std::to_string(v.size()) + " does not fit " +
                         shape(rows, cols));
  Matrix x(rows, cols);
  Index idx = 0;
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) x(i, j) = v(idx++);
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector vec_identity(Index n) { return vec(Matrix::Identity(n, n)); }

bool all_finite(const Matrix& m) {
  for (Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

SuperOp::SuperOp(Index dim, Matrix mat) : dim_(dim), mat_(std::move(mat)) {
  if (dim < 0 || mat_.rows() != dim * dim || mat_.cols() != dim * dim)
    throw DimensionError("SuperOp: matrix " + shape(mat_.rows(), mat_.cols()) +
                         " is not of order dim^2 = " + std::to_string(dim * dim));
  if (!all_finite(mat_)) throw ValidationError("SuperOp: non-finite entries");
}

SuperOp SuperOp::identity(Index dim) { return SuperOp(dim, Matrix::Identity(dim * dim, dim * dim)); }

SuperOp SuperOp::zero(Index dim) { return SuperOp(dim, Matrix::Zero(dim * dim, dim * dim)); }

SuperOp SuperOp::conjugation(const Matrix& b) {
  if (b.rows() != b.cols()) throw DimensionError("conjugation: operator must be square");
  return SuperOp(b.rows(), kron(b, b.conjugate()));
}

Matrix SuperOp::apply(const Matrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_)
    throw DimensionError("apply: expected " + shape(dim_, dim_) + ", got " +
                         shape(x.rows(), x.cols()));
  return unvec(mat_ * vec(x), dim_, dim_);
}

SuperOp compose(const SuperOp& s1, const SuperOp& s2) {
  require_same_dim(s1, s2, "compose");
  return SuperOp(s1.dim(), s1.mat() * s2.mat());
}

SuperOp add(const SuperOp& s1, const SuperOp& s2) {
  require_same_dim(s1, s2, "add");
  return SuperOp(s1.dim(), s1.mat() + s2.mat());
}

SuperOp scale(const SuperOp& s, Complex c) { return SuperOp(s.dim(), c * s.mat()); }

SuperOp power(const SuperOp& s, int m) {
  if (m < 0) throw ParameterError("power: negative exponent");
  Matrix acc = Matrix::Identity(s.mat().rows(), s.mat().cols());
  Matrix base = s.mat();
  // square and multiply
  while (m > 0) {
    if (m & 1) acc = acc * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return SuperOp(s.dim(), acc);
}

bool approx_equal(const SuperOp& a, const SuperOp& b, double tol) {
  return a.dim() == b.dim() && approx_equal(a.mat(), b.mat(), tol);
}

}  // namespace qhit
