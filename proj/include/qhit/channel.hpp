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

// smallest eigenvalue a fixed density must exceed to count as faithful
inline constexpr double kFaithfulTol = 1e-9;

// T(X) = sum_i V_i X V_i*
class KrausChannel {
 public:
  // throws ValidationError when sum V_i* V_i deviates from I by more than tol
  explicit KrausChannel(std::vector<Matrix> kraus, double tol = kDefaultTol);

  static KrausChannel unitary(const Matrix& u, double tol = kDefaultTol);
  // shape checks only; used to report on broken input
  static KrausChannel unchecked(std::vector<Matrix> kraus);

  Index dim() const { return dim_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  // max entry of |sum V_i* V_i - I|
  double tp_deviation() const;

 private:
  struct Unchecked {};
  KrausChannel(Unchecked, std::vector<Matrix> kraus);

  Index dim_ = 0;
  std::vector<Matrix> kraus_;
};

SuperOp represent(const KrausChannel& ch);

struct ChannelDiagnostics {
  bool is_trace_preserving = false;
  double tp_deviation = 0.0;
  bool is_unital = false;
  double unital_deviation = 0.0;
  bool is_completely_positive = false;
  Index fixed_space_dim = 0;
  bool is_irreducible = false;
  std::vector<Complex> peripheral_eigenvalues;
  bool jordan_trivial_at_1 = false;
  std::optional<Matrix> fixed_density;
  double min_fixed_eigenvalue = 0.0;
  double spectral_radius = 0.0;
  std::vector<std::string> warnings;
};

ChannelDiagnostics validate(const KrausChannel& ch, double tol = kDefaultTol);
// same diagnostics for a raw representation matrix
ChannelDiagnostics diagnose(const SuperOp& s, double tol = kDefaultTol);

struct FixedStates {
  // Hermitian basis of ker(S - I); the first element is a density when one exists
  std::vector<Matrix> states;
  bool has_density = false;
  std::vector<std::string> warnings;
};

FixedStates fixed_states(const SuperOp& s);

// dimension of ker(S - I)
Index fixed_space_dim(const Matrix& rep);

bool is_trace_preserving(const SuperOp& s, double tol = kDefaultTol);
bool is_unital(const SuperOp& s, double tol = kDefaultTol);

// Choi matrix sum_kl |k><l| (x) T(|k><l|)
Matrix choi_matrix(const SuperOp& s);
bool is_completely_positive(const SuperOp& s, double tol = kPsdTol);

// Orthonormal basis of V with the derived projectors.
class GoalSubspace {
 public:
  GoalSubspace() = default;
  // columns must be orthonormal within tol
  explicit GoalSubspace(Matrix basis, double tol = kDefaultTol);
  // orthonormalizes an arbitrary spanning list
  static GoalSubspace spanned_by(const std::vector<Vector>& vectors);

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const Matrix& P() const { return p_; }
  const Matrix& Q() const { return q_; }
  const SuperOp& PP() const { return pp_; }
  const SuperOp& QQ() const { return qq_; }
  const SuperOp& RR() const { return rr_; }

  // rho == P rho P
  bool supports(const Matrix& rho, double tol = 1e-9) const;
  // rho == Q rho Q
  bool orthogonal_supports(const Matrix& rho, double tol = 1e-9) const;

 private:
  Matrix basis_, p_, q_;
  SuperOp pp_, qq_, rr_;
};

struct AssumptionOne {
  bool holds = false;
  std::vector<Complex> offending;
  std::vector<Complex> spectrum;
};

// 1 not in spec(QQ S)
AssumptionOne assumption_one(const SuperOp& s, const GoalSubspace& v, double tol = kEigenOneTol);

// p S1 + (1 - p) S2
SuperOp randomize(const SuperOp& s1, const SuperOp& s2, double p);

Matrix pure_state(const Vector& psi);
bool is_density(const Matrix& rho, double tol = kPsdTol);
// throws ValidationError naming what
void require_density(const Matrix& rho, const std::string& what, double tol = kPsdTol);

}  // namespace qhit
