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

#include "qhit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace qhit {

std::vector<double> singular_values(const Matrix& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

RankInfo rank_info(const Matrix& m, double rel_tol) {
  RankInfo info;
  const auto s = singular_values(m);
  if (s.empty() || s.front() == 0.0) return info;
  info.threshold = rel_tol * s.front();
  for (double v : s) {
    if (v > info.threshold) ++info.rank;
    if (v > info.threshold / 10.0 && v < info.threshold * 10.0) info.ambiguous = true;
  }
  return info;
}

Index numerical_rank(const Matrix& m, double rel_tol) { return rank_info(m, rel_tol).rank; }

Matrix null_space(const Matrix& m, double rel_tol) {
  const Index n = m.cols();
  if (m.size() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thr = s.size() > 0 ? rel_tol * s(0) : 0.0;
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > thr && s(i) > 0.0) ++r;
  return svd.matrixV().rightCols(n - r);
}

Matrix complete_unitary(const Matrix& n) {
  const Index dim = n.rows();
  const Index k = n.cols();
  if (k == 0) return Matrix::Identity(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(n);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix w(dim, dim);
  w.leftCols(k) = n;
  w.rightCols(dim - k) = q.rightCols(dim - k);
  return w;
}

std::vector<Complex> eigenvalues(const Matrix& m) {
  if (m.size() == 0) return {};
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  const auto& ev = es.eigenvalues();
  std::vector<Complex> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (std::abs(std::abs(a) - std::abs(b)) > 1e-12) return std::abs(a) > std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  return out;
}

std::vector<Complex> eigenvalues_near(const std::vector<Complex>& spectrum, Complex z,
                                      double tol) {
  std::vector<Complex> out;
  for (Complex l : spectrum)
    if (std::abs(l - z) < tol) out.push_back(l);
  return out;
}

Matrix hermitize(const Matrix& m) { return (m + m.adjoint()) / 2.0; }

double min_hermitian_eigenvalue(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_psd(const Matrix& m, double tol) { return min_hermitian_eigenvalue(m) >= -tol; }

Inverse invert(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(what) + ": matrix not square");
  Eigen::PartialPivLU<Matrix> lu(a);
  Inverse out;
  out.rcond = lu.rcond();
  if (!(out.rcond >= kSingularRcond))
    throw NumericalError(std::string(what) + ": matrix is numerically singular (rcond " +
                         std::to_string(out.rcond) + ")");
  out.inv = lu.inverse();
  if (!all_finite(out.inv)) throw NumericalError(std::string(what) + ": non-finite inverse");
  return out;
}

double frobenius(const Matrix& m) { return m.norm(); }

}  // namespace qhit
