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

#include <cstdint>
#include <random>
#include <vector>

#include "qhit/channel.hpp"
#include "qhit/matrep.hpp"

namespace qhit::testing {

// row-major real entries scaled by s
Matrix real_matrix(Index rows, Index cols, std::initializer_list<double> entries, double s = 1.0);
Vector basis_vector(Index n, Index i);

// two-Kraus qubit channel with A = [[1,1],[0,1]]/sqrt3, B = [[1,0],[-1,1]]/sqrt3
struct TwoKrausExample {
  KrausChannel channel;
  SuperOp t;
  GoalSubspace v;  // span{psi}
  Vector psi, phi;
  Matrix rho_phi;
};
TwoKrausExample two_kraus_example();

// printed matrices of the two-Kraus example
Matrix printed_t();          // [T]
Matrix printed_k();          // [K]
Matrix printed_phi();        // induced QMC
Vector printed_pi();         // stationary vector
Matrix printed_d();          // block diagonal of hitting operators
Matrix printed_g();          // Hunter g-inverse
Matrix printed_gd();

// depolarizing-type T(s) and the rotation U of the randomization example
KrausChannel pauli_channel(double s);
Matrix rotation_u();
GoalSubspace first_axis(Index n);
Matrix printed_ku();
Matrix printed_h0();
Matrix printed_a0_sharp();
// (2,2) entry of G_p as printed
double printed_g22(double p, double s);

Matrix hadamard();
Matrix printed_hadamard_asharp();
Matrix printed_hadamard_kernel();
double forbidden_alpha();

Matrix walk4_u();
Matrix printed_b(int which);  // 1..4

// generators
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double a = 0.0, double b = 1.0);
  double normal();
  int integer(int lo, int hi);  // inclusive
  Complex cnormal();
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

Matrix random_complex(Rng& rng, Index rows, Index cols);
Vector random_unit(Rng& rng, Index n);
Matrix random_unitary(Rng& rng, Index n);
// r Kraus operators cut from a random isometry C^n -> C^{rn}
KrausChannel random_channel(Rng& rng, Index n, Index r);
Matrix random_density(Rng& rng, Index n, Index rank);
// column-stochastic, entries strictly positive with random zeros kept irreducible
Eigen::MatrixXd random_stochastic(Rng& rng, Index n);
// Kraus sqrt(p_ij)|i><j|
KrausChannel classical_embedding(const Eigen::MatrixXd& p);

}  // namespace qhit::testing
