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

#include <optional>
#include <string>
#include <vector>

#include "qhit/linalg.hpp"
#include "qhit/matrep.hpp"

namespace qhit {

class Qmc;

// g-inverse checks are relative: |AGA - A| <= kGInverseTol * max(1, |A|)
inline constexpr double kGInverseTol = 1e-9;
// health warning for the kernel/range split
inline constexpr double kSplitCondWarn = 1e8;

struct IndexInfo {
  int index = 0;
  bool ambiguous = false;
  std::vector<Index> ranks;  // rank(A^0), rank(A^1), ...
};

// smallest m >= 0 with rank(A^m) == rank(A^(m+1))
IndexInfo index_info(const Matrix& a);
int matrix_index(const Matrix& a);

struct GroupInverse {
  Matrix a;
  Matrix asharp;
  Matrix ergodic_projector;  // I - A# A
  int index = 0;
  double split_condition = 1.0;  // condition of the range block C
  double residual = 0.0;         // worst of the three axioms, absolute
  std::vector<std::string> warnings;
};

// Kernel-first unitary split A = W [[0, B], [0, C]] W*, A# = W [[0, B C^-2], [0, C^-1]] W*.
// Throws NoGroupInverse when index(A) >= 2.
GroupInverse group_inverse(const Matrix& a);

// worst residual over A A# A = A, A# A A# = A#, A A# = A# A
double group_axiom_residual(const Matrix& a, const Matrix& asharp);

struct DrazinLimit {
  Matrix extrapolate;
  std::vector<double> z;
  std::vector<double> residuals;  // |A X(z) A - A| per z
};

// (A^2 + zI)^-1 A on a z schedule, Lagrange-extrapolated to z = 0
DrazinLimit drazin_limit(const Matrix& a, const std::vector<double>& z_schedule = {1e-4, 1e-5,
                                                                                     1e-6});

Matrix ergodic_projector(const GroupInverse& gi);

// (1/n) sum_{m<n} phi^m by repeated doubling
Matrix cesaro_mean(const Matrix& phi, long n);

enum class GInverseKind { HunterFamily, Group, Fundamental, External };
std::string to_string(GInverseKind kind);

struct HunterParams {
  Vector t, u, f, g;
};

struct GInverse {
  Matrix a;
  Matrix g;
  GInverseKind kind = GInverseKind::External;
  std::optional<HunterParams> params;
  double residual = 0.0;  // |AGA - A|
};

double ginverse_residual(const Matrix& a, const Matrix& g);
bool is_ginverse(const Matrix& a, const Matrix& g, double tol = kGInverseTol);

// verifies AGA == A; throws NumericalError otherwise
GInverse make_ginverse(Matrix a, Matrix g, GInverseKind kind);

// t = e_1, u = e_I, f = 0, g = e_1
HunterParams default_hunter_params(const Qmc& q);

// G = (I - Phi + |t><u|)^-1 + |pi><f| + |g><e_I| for an irreducible q
GInverse hunter_ginverse(const Qmc& q, const HunterParams& params);

}  // namespace qhit
