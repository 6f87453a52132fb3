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

#include <vector>

#include "qhit/matrep.hpp"

// Dense helpers shared by the modules. Thin wrappers over Eigen decompositions.
namespace qhit {

// singular values below kRankRelTol * sigma_max count as zero
inline constexpr double kRankRelTol = 1e-10;
// |lambda - 1| below this means "1 is an eigenvalue"
inline constexpr double kEigenOneTol = 1e-9;
// Hermitian PSD test: min eigenvalue >= -kPsdTol
inline constexpr double kPsdTol = 1e-10;
// inversions below this reciprocal condition are refused
inline constexpr double kSingularRcond = 1e-13;
// condition numbers above this are reported
inline constexpr double kReportCond = 1e10;

std::vector<double> singular_values(const Matrix& m);

struct RankInfo {
  Index rank = 0;
  double threshold = 0.0;
  bool ambiguous = false;  // some singular value within 10x of the threshold
};

RankInfo rank_info(const Matrix& m, double rel_tol = kRankRelTol);
Index numerical_rank(const Matrix& m, double rel_tol = kRankRelTol);

// orthonormal basis of ker(m), one column per null direction
Matrix null_space(const Matrix& m, double rel_tol = kRankRelTol);

// unitary W whose leading columns are the orthonormal columns n
Matrix complete_unitary(const Matrix& n);

// eigenvalues ordered by descending modulus, then argument
std::vector<Complex> eigenvalues(const Matrix& m);

// eigenvalues lying within tol of z
std::vector<Complex> eigenvalues_near(const std::vector<Complex>& spectrum, Complex z,
                                      double tol = kEigenOneTol);

Matrix hermitize(const Matrix& m);
double min_hermitian_eigenvalue(const Matrix& m);
bool is_psd(const Matrix& m, double tol = kPsdTol);

struct Inverse {
  Matrix inv;
  double rcond = 0.0;
};

// partial-pivoting LU; throws NumericalError if rcond < kSingularRcond
Inverse invert(const Matrix& a, const char* what = "invert");

double frobenius(const Matrix& m);

}  // namespace qhit
