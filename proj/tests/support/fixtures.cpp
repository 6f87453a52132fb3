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


#include "fixtures.hpp"

#include <cmath>

#include "qhit/linalg.hpp"

namespace qhit::testing {

namespace {
const double r3 = std::sqrt(3.0);
}

Matrix real_matrix(Index rows, Index cols, std::initializer_list<double> entries, double s) {
  Matrix m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = s * *it++;
  return m;
}

Vector basis_vector(Index n, Index i) {
  Vector e = Vector::Zero(n);
  e(i) = 1.0;
  return e;
}

TwoKrausExample two_kraus_example() {
  const double s = 1.0 / std::sqrt(3.0);
  KrausChannel ch({real_matrix(2, 2, {1, 1, 0, 1}, s), real_matrix(2, 2, {1, 0, -1, 1}, s)});
  Vector psi(2), phi(2);
  psi << 1.0, 1.0;
  phi << 1.0, -1.0;
  psi /= std::sqrt(2.0);
  phi /= std::sqrt(2.0);
  Matrix basis = psi;
  TwoKrausExample ex{ch, represent(ch), GoalSubspace(basis), psi, phi, pure_state(phi)};
  return ex;
}

Matrix printed_t() { return real_matrix(4, 4, {2, 1, 1, 1, -1, 2, 0, 1, -1, 0, 2, 1, 1, -1, -1, 2}, 1.0 / 3); }

Matrix printed_k() {
  return real_matrix(4, 4,
                     {39, -12, -12, 9,
                      -72, 32, 28, -12,
                      -72, 28, 32, -12,
                      177, -72, -72, 39},
                     1.0 / 6);
}

Matrix printed_phi() {
  return real_matrix(8, 8,
                     {3, 6, 6, 3, 3, 6, 6, 3,
                      1, 6, -2, 5, 1, 6, -2, 5,
                      1, -2, 6, 5, 1, -2, 6, 5,
                      -1, -2, -2, 7, -1, -2, -2, 7,
                      5, -2, -2, 1, 5, -2, -2, 1,
                      -5, 2, 2, -1, -5, 2, 2, -1,
                      -5, 2, 2, -1, -5, 2, 2, -1,
                      5, -2, -2, 1, 5, -2, -2, 1},
                     1.0 / 12);
}

Vector printed_pi() { return real_matrix(8, 1, {1, 1, 1, 1, 1, -1, -1, 1}, 0.25); }

Matrix printed_d() {
  return real_matrix(8, 8,
                     {-51, 24, 24, -9, 0, 0, 0, 0,
                      18, -4, -8, 6, 0, 0, 0, 0,
                      18, -8, -4, 6, 0, 0, 0, 0,
                      87, -36, -36, 21, 0, 0, 0, 0,
                      0, 0, 0, 0, 3, 0, 0, 9,
                      0, 0, 0, 0, -3, 0, 0, -9,
                      0, 0, 0, 0, -3, 0, 0, -9,
                      0, 0, 0, 0, 3, 0, 0, 9},
                     1.0 / 6);
}

Matrix printed_g() {
  return real_matrix(8, 8,
                     {5, 2, 2, 5, 1, 2, 2, 5,
                      1, 8, -4, 3, 1, 4, -4, 3,
                      1, -4, 8, 3, 1, -4, 4, 3,
                      1, -2, -2, 5, 1, -2, -2, 1,
                      1, 0, 0, -1, 5, 0, 0, -1,
                      -1, 0, 0, 1, -1, 4, 0, 1,
                      -1, 0, 0, 1, -1, 0, 4, 1,
                      1, 0, 0, -1, 1, 0, 0, 3},
                     0.25);
}

Matrix printed_gd() {
  return real_matrix(8, 8,
                     {5, 2, 2, 5, 0, 0, 0, 0,
                      1, 8, -4, 3, 0, 0, 0, 0,
                      1, -4, 8, 3, 0, 0, 0, 0,
                      1, -2, -2, 5, 0, 0, 0, 0,
                      0, 0, 0, 0, 5, 0, 0, -1,
                      0, 0, 0, 0, -1, 4, 0, 1,
                      0, 0, 0, 0, -1, 0, 4, 1,
                      0, 0, 0, 0, 1, 0, 0, 3},
                     0.25);
}

KrausChannel pauli_channel(double s) {
  const Complex i(0.0, 1.0);
  Matrix a1 = Matrix::Identity(2, 2) * std::sqrt(1.0 - 0.75 * s);
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  const double c = std::sqrt(s) / 2.0;
  return KrausChannel({a1, c * x, c * y, c * z});
}

Matrix rotation_u() { return real_matrix(2, 2, {r3, -1, 1, r3}, 0.5); }

GoalSubspace first_axis(Index n) {
  Matrix b = basis_vector(n, 0);
  return GoalSubspace(b);
}

Matrix printed_ku() {
  return real_matrix(4, 4,
                     {2, r3, r3, 4,
                      -r3, -3, -4, -4 * r3,
                      -r3, -4, -3, -4 * r3,
                      4, 4 * r3, 4 * r3, 12});
}

Matrix printed_h0() {
  const double h = r3 / 2;
  return real_matrix(8, 8,
                     {2, r3, r3, 4, 2, r3, r3, 4,
                      -r3, -3, -4, -4 * r3, -r3, -3, -4, -4 * r3,
                      -r3, -4, -3, -4 * r3, -r3, -4, -3, -4 * r3,
                      0, 0, 0, 0, 0, 0, 0, 0,
                      0, 0, 0, 0, 0, 0, 0, 0,
                      0, 0, 0, 0, 0, 0, 0, 0,
                      0, 0, 0, 0, 0, 0, 0, 0,
                      1, -h, -h, 2, 1, -h, -h, 2});
}

Matrix printed_a0_sharp() {
  return real_matrix(8, 8,
                     {1, -r3, -r3, -1, -3, -r3, -r3, -1,
                      r3, 1, 1, -r3, r3, -3, 1, -r3,
                      r3, 1, 1, -r3, r3, 1, -3, -r3,
                      0, 0, 0, 4, 0, 0, 0, 0,
                      0, 0, 0, 0, 4, 0, 0, 0,
                      0, 0, 0, 0, 0, 4, 0, 0,
                      0, 0, 0, 0, 0, 0, 4, 0,
                      -1, r3, r3, -3, -1, r3, r3, 1},
                     0.25);
}

double printed_g22(double p, double s) {
  const double num = 2 * p * p - 3 * p * p * s - 4 * p + 4 * p * p * s * s + 3 * p * s + 2;
  const double den = 4 * (p * p * s * s - p * p * s + p * p - 2 * p + p * s + 1) * p * s;
  return num / den;
}

Matrix hadamard() { return real_matrix(2, 2, {1, 1, 1, -1}, 1.0 / std::sqrt(2.0)); }

Matrix printed_hadamard_asharp() {
  return real_matrix(8, 8,
                     {1, -1, -1, -1, -7, -1, -1, -1,
                      -1, 3, -1, 1, -1, -5, -1, 1,
                      -1, -1, 3, 1, -1, -1, -5, 1,
                      0, 0, 0, 8, 0, 0, 0, 0,
                      0, 0, 0, 0, 8, 0, 0, 0,
                      0, 0, 0, 0, 0, 8, 0, 0,
                      0, 0, 0, 0, 0, 0, 8, 0,
                      -1, 1, 1, -7, -1, 1, 1, 1},
                     0.125);
}

Matrix printed_hadamard_kernel() {
  return real_matrix(8, 8,
                     {2, -1, -1, 2, 2, -1, -1, 2,
                      -1, 1, 2, -2, -1, 1, 2, -2,
                      -1, 2, 1, -2, -1, 2, 1, -2,
                      0, 0, 0, 0, 0, 0, 0, 0,
                      0, 0, 0, 0, 0, 0, 0, 0,
                      0, 0, 0, 0, 0, 0, 0, 0,
                      0, 0, 0, 0, 0, 0, 0, 0,
                      2, -2, -2, 2, 2, -2, -2, 2});
}

double forbidden_alpha() { return 0.5 * std::sqrt(2.0 + std::sqrt(2.0)); }

Matrix walk4_u() {
  return real_matrix(4, 4, {1, 1, 0, 0, 0, 0, 1, 1, 1, -1, 0, 0, 0, 0, 1, -1}, 1.0 / std::sqrt(2.0));
}

Matrix printed_b(int which) {
  switch (which) {
    case 1:
      return real_matrix(8, 8,
                         {4, -3, -1, 2, -3, 4, 1, -2,
                          -1, 1, -1, -5, 1, -1, 2, 6,
                          -3, 3, 1, -2, 4, -4, -1, 2,
                          2, -2, -5, 8, -2, 2, 6, -9,
                          -1, 1, 6, -3, 1, -1, -6, 3,
                          6, -6, -2, 4, -6, 6, 2, -4,
                          1, -1, -6, 3, -1, 1, 6, -3,
                          -3, 3, 4, -13, 3, -3, -4, 13});
    case 2:
      return real_matrix(8, 8,
                         {-1, 1, 6, -3, 2, -2, -3, 10,
                          6, -6, -2, 4, -3, 3, 8, -12,
                          1, -1, -6, 3, -2, 2, 3, -10,
                          -3, 3, 4, -13, 10, -10, -12, 25,
                          -1, 2, -2, 8, -5, 6, 4, -12,
                          -2, 2, 10, -6, 4, -4, -6, 18,
                          2, -2, 2, -8, 6, -6, -4, 12,
                          8, -8, -6, 16, -12, 12, 18, -34});
    case 3:
      return real_matrix(8, 8,
                         {-3, 4, 1, -2, 3, -4, -1, 2,
                          1, -1, 2, 6, -1, 1, -2, -6,
                          4, -4, -1, 2, -4, 4, 1, -2,
                          -2, 2, 6, -9, 2, -2, -6, 9,
                          2, -2, -3, 10, -2, 2, 3, -10,
                          -3, 3, 8, -12, 3, -3, -8, 12,
                          -2, 2, 3, -10, 2, -2, -3, 10,
                          10, -10, -12, 25, -10, 10, 12, -25});
    default:
      return real_matrix(8, 8,
                         {1, -1, -6, 3, -2, 2, 3, -10,
                          -6, 6, 2, -4, 3, -3, -8, 12,
                          -1, 1, 6, -3, 2, -2, -3, 10,
                          3, -3, -4, 13, -10, 10, 12, -25,
                          -5, 6, 4, -12, 8, -9, -13, 25,
                          4, -4, -6, 18, -13, 13, 16, -34,
                          6, -6, -4, 12, -9, 9, 13, -25,
                          -12, 12, 18, -34, 25, -25, -34, 72});
  }
}

double Rng::uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng_); }
double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
Complex Rng::cnormal() { return {normal(), normal()}; }

Matrix random_complex(Rng& rng, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
  return m;
}

Vector random_unit(Rng& rng, Index n) {
  Vector v = random_complex(rng, n, 1);
  return v / v.norm();
}

Matrix random_unitary(Rng& rng, Index n) {
  Eigen::HouseholderQR<Matrix> qr(random_complex(rng, n, n));
  return qr.householderQ() * Matrix::Identity(n, n);
}

KrausChannel random_channel(Rng& rng, Index n, Index r) {
  Eigen::HouseholderQR<Matrix> qr(random_complex(rng, r * n, n));
  const Matrix w = qr.householderQ() * Matrix::Identity(r * n, n);
  std::vector<Matrix> kraus;
  for (Index i = 0; i < r; ++i) kraus.push_back(w.block(i * n, 0, n, n));
  return KrausChannel(kraus, 1e-9);
}

Matrix random_density(Rng& rng, Index n, Index rank) {
  const Matrix g = random_complex(rng, n, rank);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

Eigen::MatrixXd random_stochastic(Rng& rng, Index n) {
  Eigen::MatrixXd p(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) p(i, j) = rng.uniform() < 0.3 ? 0.0 : rng.uniform(0.05, 1.0);
  // a cycle keeps it irreducible
  for (Index j = 0; j < n; ++j) p((j + 1) % n, j) = rng.uniform(0.05, 1.0);
  for (Index j = 0; j < n; ++j) p.col(j) /= p.col(j).sum();
  return p;
}

KrausChannel classical_embedding(const Eigen::MatrixXd& p) {
  const Index n = p.rows();
  std::vector<Matrix> kraus;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (p(i, j) <= 0.0) continue;
      Matrix v = Matrix::Zero(n, n);
      v(i, j) = std::sqrt(p(i, j));
      kraus.push_back(v);
    }
  return KrausChannel(kraus, 1e-9);
}

}  // namespace qhit::testing
