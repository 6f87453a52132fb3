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

#include <string>
#include <vector>

#include "qhit/channel.hpp"
#include "qhit/matrep.hpp"

namespace qhit {

// X_ab = Pi_a X Pi_b with Pi_1 = I - QQ, Pi_2 = QQ
struct BlockSplit {
  Matrix b11, b12, b21, b22;
};

BlockSplit split_blocks(const Matrix& x, const GoalSubspace& v);

struct HittingMaps {
  GoalSubspace v;
  SuperOp H;  // S (I - QQ S)^-1
  SuperOp K;  // S (I - QQ S)^-2
  BlockSplit h_blocks, k_blocks;
  double rcond = 0.0;
  std::vector<std::string> warnings;
};

// throws SpectralObstruction when 1 is in spec(QQ S)
HittingMaps analytic_hk(const SuperOp& s, const GoalSubspace& v);

enum class Side { InV, InVPerp };

// Tr(K_11 rho) for rho in V, Tr(K_12 rho) for rho in V-perp
double tau_from_k(const HittingMaps& maps, const Matrix& rho, Side side);

// Tr((I - QQ) H rho)
double hit_probability(const HittingMaps& maps, const Matrix& rho);

struct FundamentalMap {
  SuperOp Z;  // (I - S + |vec pi><vec I|)^-1
  Matrix pi;
  double rcond = 0.0;
  double residual = 0.0;  // |A Z A - A|, A = I - T
};

// throws ReducibleError unless S has a unique faithful fixed density
FundamentalMap fundamental_map(const SuperOp& s);

// Tr(K_11 (Z_11 rho_psi - Z_12 rho_phi)) for unit psi in V and phi in V-perp
double mhtf_tau(const SuperOp& s, const GoalSubspace& v, const FundamentalMap& z,
                const HittingMaps& maps, const Vector& psi, const Vector& phi);

}  // namespace qhit
