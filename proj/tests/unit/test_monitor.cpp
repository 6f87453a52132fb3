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
#include "oracles.hpp"
#include "qhit/hitting.hpp"
#include "qhit/monitor.hpp"

using namespace qhit;
using namespace qhit::testing;

TEST(Monitor, TwoKrausSeriesGivesSix) {
  const TwoKrausExample ex = two_kraus_example();
  const MonitorSeries ms = first_visit_series(ex.t, ex.v, ex.rho_phi);
  EXPECT_TRUE(ms.converged);
  EXPECT_FALSE(ms.diverges);
  EXPECT_NEAR(ms.cumulative_prob, 1.0, 1e-10);
  EXPECT_NEAR(ms.tau(), 6.0, 1e-8);
  EXPECT_LT(ms.max_term_gap, 1e-12);
}

TEST(Monitor, StepProbabilitiesMatchKrausIteration) {
  Rng rng(42);
  const KrausChannel ch = random_channel(rng, 3, 2);
  const SuperOp s = represent(ch);
  const GoalSubspace v = first_axis(3);
  const Matrix rho = random_density(rng, 3, 2);
  const MonitorSeries ms = first_visit_series(s, v, rho);
  // independent loop on matrices
  const Matrix p = v.P(), q = v.Q();
  Matrix x = rho;
  for (int r = 1; r <= 6; ++r) {
    Matrix y = Matrix::Zero(3, 3);
    for (const Matrix& k : ch.kraus()) y += k * x * k.adjoint();
    EXPECT_NEAR(ms.terms[r - 1].second, (p * y * p).trace().real(), 1e-13);
    x = q * y * q;
  }
  const BruteSeries bs = brute_force_tau(ch.kraus(), p, rho, 20000);
  EXPECT_NEAR(ms.tau(), bs.tau, 1e-8);
  EXPECT_NEAR(step_prob(s, v, rho, 1), ms.terms[0].second, 1e-13);
}

TEST(Monitor, HadamardForbiddenAlphaNeverHitsFromSomeStates) {
  const SuperOp u = SuperOp::conjugation(hadamard());
  const double a = forbidden_alpha();
  Matrix b(2, 1);
  b << a, std::sqrt(1.0 - a * a);
  const GoalSubspace v(b);
  Vector phi(2);
  phi << -std::sqrt(1.0 - a * a), a;
  const MonitorSeries ms = first_visit_series(u, v, pure_state(phi));
  // the orthogonal state is an eigenvector of H: it is never detected
  EXPECT_TRUE(ms.diverges);
  EXPECT_TRUE(std::isinf(ms.tau()));
}

TEST(Monitor, HadamardAxisTakesTwoSteps) {
  const SuperOp u = SuperOp::conjugation(hadamard());
  Vector e2(2);
  e2 << 0.0, 1.0;
  const MonitorSeries ms = first_visit_series(u, first_axis(2), pure_state(e2));
  EXPECT_NEAR(ms.tau(), 2.0, 1e-10);
}

TEST(Monitor, GeneratingFunctionDerivativeIsK) {
  const TwoKrausExample ex = two_kraus_example();
  const HittingMaps maps = analytic_hk(ex.t, ex.v);
  // d/dz [z S (I - z QQ S)^-1] at z = 1 is S (I - QQ S)^-2
  const double h = 1e-5;
  const Matrix d = (generating_function(ex.t, ex.v, 1.0 + h).mat() - generating_function(ex.t, ex.v, 1.0 - h).mat()) /
                   (2.0 * h);
  EXPECT_MAT_NEAR(d, maps.K.mat(), 1e-5);
  EXPECT_MAT_NEAR(generating_function(ex.t, ex.v, 1.0).mat(), maps.H.mat(), 1e-12);
}

TEST(Monitor, GeneratingFunctionSingular) {
  const SuperOp u = SuperOp::conjugation(hadamard());
  const double a = forbidden_alpha();
  Matrix b(2, 1);
  b << a, std::sqrt(1.0 - a * a);
  EXPECT_THROW(generating_function(u, GoalSubspace(b), 1.0), SpectralObstruction);
}

TEST(Monitor, SiteSeriesOnInducedQmcMatchesChannelSeries) {
  const TwoKrausExample ex = two_kraus_example();
  const Qmc q = induce(ex.t, ex.v);
  const MonitorSeries site = site_first_visit_series(q, 0, VecState::at_site(2, 1, ex.rho_phi));
  EXPECT_NEAR(site.tau(), 6.0, 1e-8);
}

TEST(Monitor, StepProbRejectsBadInput) {
  const TwoKrausExample ex = two_kraus_example();
  EXPECT_THROW(step_prob(ex.t, ex.v, ex.rho_phi, 0), ParameterError);
  EXPECT_THROW(step_prob(ex.t, ex.v, Matrix::Identity(2, 2), 1), ValidationError);
}
