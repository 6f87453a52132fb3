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


#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "matchers.hpp"
#include "qhit/channel.hpp"
#include "qhit/linalg.hpp"

using namespace qhit;
using namespace qhit::testing;

TEST(Channel, TwoKrausRepresentationMatchesPrinted) {
  const TwoKrausExample ex = two_kraus_example();
  EXPECT_MAT_NEAR(ex.t.mat(), printed_t(), 1e-12);
}

TEST(Channel, TwoKrausDiagnostics) {
  const TwoKrausExample ex = two_kraus_example();
  const ChannelDiagnostics d = validate(ex.channel);
  EXPECT_TRUE(d.is_trace_preserving);
  EXPECT_TRUE(d.is_unital);
  EXPECT_TRUE(d.is_completely_positive);
  EXPECT_EQ(d.fixed_space_dim, 1);
  EXPECT_TRUE(d.is_irreducible);
  ASSERT_TRUE(d.fixed_density.has_value());
  EXPECT_MAT_NEAR(*d.fixed_density, Matrix::Identity(2, 2) / 2.0, 1e-10);
}

TEST(Channel, HadamardIsReducibleWithTrivialJordanBlocks) {
  const ChannelDiagnostics d = diagnose(SuperOp::conjugation(hadamard()));
  EXPECT_EQ(d.fixed_space_dim, 2);
  EXPECT_FALSE(d.is_irreducible);
  EXPECT_TRUE(d.jordan_trivial_at_1);
  EXPECT_TRUE(d.is_unital);
}

TEST(Channel, KrausNotTracePreservingIsRejected) {
  Matrix v = Matrix::Identity(2, 2) * 0.9;
  EXPECT_THROW(KrausChannel({v}), ValidationError);
  const KrausChannel bad = KrausChannel::unchecked({v});
  EXPECT_NEAR(bad.tp_deviation(), 1.0 - 0.81, 1e-12);
  EXPECT_FALSE(is_trace_preserving(represent(bad)));
}

TEST(Channel, KrausShapeMismatch) {
  EXPECT_THROW(KrausChannel({Matrix::Identity(2, 2), Matrix::Identity(3, 3)}), Error);
  EXPECT_THROW(KrausChannel(std::vector<Matrix>{}), Error);
}

TEST(Channel, ChoiDetectsTranspose) {
  // transpose map: vec(X^T) is a permutation of vec(X)
  Matrix t = Matrix::Zero(4, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) t(j * 2 + i, i * 2 + j) = 1.0;
  const SuperOp s(2, t);
  EXPECT_TRUE(is_trace_preserving(s));
  EXPECT_FALSE(is_completely_positive(s));
  Rng rng(1);
  EXPECT_TRUE(is_completely_positive(represent(random_channel(rng, 3, 2))));
}

TEST(Channel, ChoiOfIdentityIsMaximallyEntangledProjector) {
  const Matrix c = choi_matrix(SuperOp::identity(2));
  // sum_kl |k><l| (x) |k><l|
  Matrix ref = Matrix::Zero(4, 4);
  for (Index k = 0; k < 2; ++k)
    for (Index l = 0; l < 2; ++l) ref(k * 2 + k, l * 2 + l) = 1.0;
  EXPECT_MAT_NEAR(c, ref, 1e-14);
}

TEST(Channel, GoalSubspaceProjectors) {
  const TwoKrausExample ex = two_kraus_example();
  const Matrix p = real_matrix(2, 2, {1, 1, 1, 1}, 0.5);
  EXPECT_MAT_NEAR(ex.v.P(), p, 1e-14);
  EXPECT_MAT_NEAR(ex.v.PP().mat(), Matrix::Constant(4, 4, 0.25), 1e-14);
  EXPECT_MAT_NEAR(ex.v.QQ().mat(), real_matrix(4, 4, {1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1}, 0.25),
                  1e-14);
  // PP + QQ + RR = I
  EXPECT_MAT_NEAR(ex.v.PP().mat() + ex.v.QQ().mat() + ex.v.RR().mat(), Matrix::Identity(4, 4), 1e-14);
  EXPECT_TRUE(ex.v.orthogonal_supports(ex.rho_phi));
  EXPECT_FALSE(ex.v.supports(ex.rho_phi));
  EXPECT_TRUE(ex.v.supports(pure_state(ex.psi)));
}

TEST(Channel, GoalSubspaceValidation) {
  Matrix b(2, 1);
  b << 1.0, 1.0;
  EXPECT_THROW(GoalSubspace{b}, Error);
  Vector a(3), c(3);
  a << 1, 1, 0;
  c << 1, 0, 0;
  const GoalSubspace v = GoalSubspace::spanned_by({a, c});
  EXPECT_EQ(v.dim(), 2);
  EXPECT_MAT_NEAR(v.basis().adjoint() * v.basis(), Matrix::Identity(2, 2), 1e-14);
}

TEST(Channel, AssumptionOneHadamard) {
  const SuperOp u = SuperOp::conjugation(hadamard());
  EXPECT_TRUE(assumption_one(u, first_axis(2)).holds);
  const double a = forbidden_alpha();
  Matrix b(2, 1);
  b << a, std::sqrt(1.0 - a * a);
  const AssumptionOne bad = assumption_one(u, GoalSubspace(b));
  EXPECT_FALSE(bad.holds);
  ASSERT_FALSE(bad.offending.empty());
  EXPECT_NEAR(std::abs(bad.offending.front() - Complex(1.0, 0.0)), 0.0, 1e-9);
}

TEST(Channel, RandomizeRange) {
  const SuperOp a = SuperOp::identity(2), b = SuperOp::conjugation(hadamard());
  EXPECT_THROW(randomize(a, b, 1.5), ParameterError);
  EXPECT_THROW(randomize(a, b, -0.1), ParameterError);
  EXPECT_MAT_NEAR(randomize(a, b, 1.0).mat(), a.mat(), 0.0);
  EXPECT_MAT_NEAR(randomize(a, b, 0.0).mat(), b.mat(), 0.0);
}

TEST(Channel, RandomizationKeepsMaximallyMixedFixed) {
  const SuperOp t = represent(pauli_channel(0.5));
  const SuperOp m = SuperOp::conjugation(rotation_u());
  for (double p : {0.1, 0.5, 0.9}) {
    const ChannelDiagnostics d = diagnose(randomize(t, m, p));
    EXPECT_TRUE(d.is_irreducible);
    ASSERT_TRUE(d.fixed_density);
    EXPECT_MAT_NEAR(*d.fixed_density, Matrix::Identity(2, 2) / 2.0, 1e-10);
  }
  EXPECT_FALSE(diagnose(m).is_irreducible);
}

TEST(Channel, FixedStatesOfRandomChannels) {
  Rng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = rng.integer(2, 4);
    const SuperOp s = represent(random_channel(rng, n, rng.integer(2, 3)));
    const FixedStates fs = fixed_states(s);
    ASSERT_TRUE(fs.has_density);
    const Matrix& rho = fs.states.front();
    EXPECT_TRUE(is_density(rho));
    EXPECT_MAT_NEAR(s.apply(rho), rho, 1e-9);
  }
}

TEST(Channel, DensityChecks) {
  EXPECT_TRUE(is_density(Matrix::Identity(2, 2) / 2.0));
  EXPECT_FALSE(is_density(Matrix::Identity(2, 2)));
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_FALSE(is_density(neg));
  EXPECT_THROW(require_density(neg, "test"), ValidationError);
}
