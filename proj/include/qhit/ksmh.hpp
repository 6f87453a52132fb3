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
#include <utility>
#include <vector>

#include "qhit/channel.hpp"
#include "qhit/ginverse.hpp"
#include "qhit/monitor.hpp"
#include "qhit/qmc.hpp"

namespace qhit {

// How K^(i) = Phi (I - QQ_i Phi)^-2 was obtained for a site.
//   Regular: 1 not in spec(QQ_i Phi), plain inverse.
//   AbelFinitePart: 1 in the spectrum, semisimple; value is Phi (B#)^2 with B = I - QQ_i Phi,
//     the finite part of lim_{x->1} Phi (I - x QQ_i Phi)^-2. Only blocks whose divergent
//     coefficient Phi (I - B# B) vanishes are marked available.
//   Unavailable: neither.
enum class BlockStatus { Regular, AbelFinitePart, Unavailable };
std::string to_string(BlockStatus s);

struct SiteHitting {
  Index site = 0;
  bool requested = false;
  BlockStatus status = BlockStatus::Unavailable;
  Matrix k;                          // full K^(i), empty when unavailable
  std::vector<bool> block_available;  // per column site j of block row i
  std::vector<Complex> offending;     // eigenvalues of QQ_i Phi near 1
  double divergent_coefficient = 0.0;
};

struct QmcHittingOperators {
  Index n_sites = 0;
  Index k = 0;
  std::vector<SiteHitting> sites;
  Matrix d;  // blockdiag(K_00, ..., K_nn), zero where unavailable

  bool available(Index i, Index j) const;
  bool d_available(Index i) const { return available(i, i); }
  // K_ij, block (i, j) of K^(i); throws SpectralObstruction when unavailable
  Matrix block(Index i, Index j) const;
};

QmcHittingOperators qmc_hitting_operators(const Qmc& q, const std::vector<Index>& targets);
QmcHittingOperators qmc_hitting_operators(const Qmc& q);  // every site

// M_d: keep only the diagonal k^2 x k^2 blocks
Matrix diag_blocks(const Matrix& m, Index n_sites, Index k);

// grid of K_ij
Matrix hitting_matrix(const QmcHittingOperators& ops);

enum class KernelVariant { OmegaCorrected, Hunter, Group };
std::string to_string(KernelVariant v);

struct KsmhKernel {
  Matrix kernel;
  KernelVariant variant = KernelVariant::Hunter;
  Index n_sites = 0;
  Index k = 0;
  Matrix block(Index i, Index j) const;
};

// OmegaCorrected: D(Omega G - (Omega G)_d E + I - G + G_d E)
// Hunter, Group:  D(I - G + G_d E)
KsmhKernel ksmh_kernel(const Matrix& d, const Matrix& g, const std::optional<Matrix>& omega,
                       Index n_sites, Index k, KernelVariant variant);

// True when G from these parameters keeps Omega G - (Omega G)_d E out of the kernel:
// u parallel to e_I and f constant across sites. Otherwise only OmegaCorrected is exact.
bool short_kernel_applies(const HunterParams& p, Index n_sites, Index k);

// Tr([kernel]_ij rho_j)
double kernel_tau(const KsmhKernel& kernel, Index i, Index j, const Matrix& rho_j);
// same, after checking q is irreducible
double tau_irreducible_qmc(const Qmc& q, const KsmhKernel& kernel, Index i, Index j,
                           const Matrix& rho_j);

// L = K - (K - D) Phi
Matrix first_step_operator_l(const Qmc& q, const QmcHittingOperators& ops);

enum class Method { Series, AnalyticK, KsmhGinverse, KsmhGroup };
std::string to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

struct TauOptions {
  std::optional<HunterParams> hunter;
  SeriesConfig series;
  bool keep_artifacts = false;
};

struct TauReport {
  Method method = Method::Series;
  double tau = 0.0;
  std::vector<std::string> verified;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, Matrix>> artifacts;
  std::optional<MonitorSeries> series;
};

// Mean hitting time of V from rho (supported in V-perp) by one route.
// Precondition failures throw: ReducibleError, SpectralObstruction, ValidationError.
TauReport tau_channel(const SuperOp& s, const GoalSubspace& v, const Matrix& rho, Method method,
                      const TauOptions& opts = {});

struct LimitRow {
  double p = 0.0;
  double tau = 0.0;        // Hunter kernel
  double tau_group = 0.0;  // group kernel
  double g_norm = 0.0;     // Frobenius norm of G_p
  double kernel_gap = 0.0;  // |H_p - H_{D,p}|
  Matrix g, h, h_group;
};

struct KernelLimitStudy {
  std::vector<LimitRow> rows;  // in the order of p_values
  Matrix h0_extrapolated;
  double tau0_extrapolated = 0.0;
  Matrix a0_sharp;
  Matrix h0_direct;  // group kernel at p = 0
  double tau0_direct = 0.0;
  bool assumption_one_at_0 = false;
  bool g_diverges = false;
  double g_growth = 0.0;  // norm at smallest p over norm at largest p
  double h_gap = 0.0;     // |H0 extrapolated - H0 direct|
  std::vector<std::string> notes;
};

// Randomization p T + (1 - p) M' swept over p; G_p, H_p, tau_p and the p -> 0 comparison.
KernelLimitStudy kernel_limit_study(const SuperOp& t, const SuperOp& m_prime,
                                    const GoalSubspace& v, const Matrix& rho,
                                    const std::vector<double>& p_values,
                                    const std::optional<HunterParams>& params = std::nullopt);

}  // namespace qhit
