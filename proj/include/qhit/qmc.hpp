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
#include <vector>

#include "qhit/channel.hpp"
#include "qhit/matrep.hpp"

namespace qhit {

// Grid of n_sites x n_sites blocks acting on k x k matrices, stored assembled.
// Sites are 0-based.
class Qmc {
 public:
  Qmc() = default;
  // throws ValidationError unless <e_I| rep == <e_I| within tol
  Qmc(Index n_sites, Index k, Matrix rep, double tol = kDefaultTol);

  Index n_sites() const { return n_sites_; }
  Index internal_dim() const { return k_; }
  Index block_size() const { return k_ * k_; }
  Index order() const { return n_sites_ * k_ * k_; }
  const Matrix& rep() const { return rep_; }

  Matrix block(Index i, Index j) const;
  SuperOp block_superop(Index i, Index j) const;

 private:
  Index n_sites_ = 0;
  Index k_ = 0;
  Matrix rep_;
};

// |e_I> = vec(I_k) repeated once per site
Vector trace_functional(Index n_sites, Index k);

// b[i][j] is B_ij, the jump from site j to site i
Qmc from_oqw(const std::vector<std::vector<Matrix>>& b, double tol = kDefaultTol);
Qmc from_blocks(const std::vector<std::vector<SuperOp>>& blocks, double tol = kDefaultTol);

// 2-site QMC [[(I-QQ)S, (I-QQ)S], [QQ S, QQ S]]
Qmc induce(const SuperOp& s, const GoalSubspace& v);

class VecState {
 public:
  VecState() = default;
  VecState(Index n_sites, Index k, Vector data);
  static VecState at_site(Index n_sites, Index site, const Matrix& rho);
  static VecState from_sites(const std::vector<Matrix>& rhos);

  Index n_sites() const { return n_sites_; }
  Index internal_dim() const { return k_; }
  const Vector& data() const { return data_; }
  Matrix site(Index i) const;
  Complex total_trace() const;
  bool is_density(double tol = kPsdTol) const;

 private:
  Index n_sites_ = 0;
  Index k_ = 0;
  Vector data_;
};

// dimension of the fixed space of q.rep
Index fixed_space_dim(const Qmc& q);

// ergodic projection of the site-uniform maximally mixed state, renormalized
VecState stationary_density(const Qmc& q);

struct FixedMap {
  Matrix omega;  // |pi><e_I|
  VecState pi;
};

// throws ReducibleError when the fixed space is not one dimensional
FixedMap fixed_map(const Qmc& q);

struct SiteProjectors {
  std::vector<Matrix> p;  // PP_i
  std::vector<Matrix> q;  // QQ_i = I - PP_i
};

SiteProjectors site_projectors(Index n_sites, Index k);
SiteProjectors site_projectors(const Qmc& q);

// grid of identity blocks
Matrix block_constant_E(Index n_sites, Index k);
Matrix block_constant_E(const Qmc& q);

// every block maps random densities to PSD matrices
bool positive_on_samples(const Qmc& q, int samples, std::uint64_t seed, double tol = kPsdTol);

}  // namespace qhit
