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

#include <utility>
#include <vector>

#include "qhit/channel.hpp"
#include "qhit/qmc.hpp"

namespace qhit {

struct SeriesConfig {
  double increment_tol = 1e-12;  // r pi_r below this counts as quiet
  int quiet_steps = 64;
  long max_steps = 1000000;
  double plateau_gap = 1e-6;  // cumulative below 1 - gap means tau = inf
  bool keep_terms = true;
  double imag_tol = 1e-9;
};

struct MonitorSeries {
  std::vector<std::pair<long, double>> terms;  // (r, pi_r)
  double cumulative_prob = 0.0;
  double partial_tau = 0.0;
  long truncated_at = 0;
  bool converged = false;
  bool diverges = false;         // hitting probability below 1
  double max_term_gap = 0.0;     // |Tr(PP X) - Tr((I-QQ) X)| over the run
  double max_imag = 0.0;

  // +inf when the hitting probability is below one
  double tau() const;
};

// Tr(PP S^r rho)
double step_prob(const SuperOp& s, const GoalSubspace& v, const Matrix& rho, long r);

// pi_r = Tr(PP S (QQ S)^(r-1) rho), summed until quiet
MonitorSeries first_visit_series(const SuperOp& s, const GoalSubspace& v, const Matrix& rho,
                                 const SeriesConfig& cfg = {});

// same protocol on a QMC with the site projectors of `target`
MonitorSeries site_first_visit_series(const Qmc& q, Index target, const VecState& start,
                                      const SeriesConfig& cfg = {});

// z S (I - z QQ S)^-1
SuperOp generating_function(const SuperOp& s, const GoalSubspace& v, Complex z);

}  // namespace qhit
