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

#include "qhit/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qhit/ginverse.hpp"

namespace qhit {

namespace {

double real_trace(const Vector& tr, const Vector& y, const char* what) {
  const Complex t = tr.dot(y);
  if (std::abs(t.imag()) > 1e-9) {
    std::ostringstream os;
    os << what << ": trace has imaginary part " << t.imag();
    throw NumericalError(os.str());
  }
  return t.real();
}

}  // namespace

BlockSplit split_blocks(const Matrix& x, const GoalSubspace& v) {
  const Index n2 = v.QQ().mat().rows();
  if (x.rows() != n2 || x.cols() != n2) throw DimensionError("split_blocks: shape mismatch");
  const Matrix pi2 = v.QQ().mat();
  const Matrix pi1 = Matrix::Identity(n2, n2) - pi2;
  return BlockSplit{pi1 * x * pi1, pi1 * x * pi2, pi2 * x * pi1, pi2 * x * pi2};
}

HittingMaps analytic_hk(const SuperOp& s, const GoalSubspace& v) {
  const AssumptionOne a1 = assumption_one(s, v);
  if (!a1.holds)
    throw SpectralObstruction("analytic_hk: 1 is an eigenvalue of QQ S (Assumption I fails)",
                              a1.offending);
  const Index n2 = s.mat().rows();
  const Inverse m = invert(Matrix::Identity(n2, n2) - v.QQ().mat() * s.mat(), "analytic_hk");
  HittingMaps out;
  out.v = v;
  out.rcond = m.rcond;
  const Matrix h = s.mat() * m.inv;
  out.H = SuperOp(s.dim(), h);
  out.K = SuperOp(s.dim(), h * m.inv);
  out.h_blocks = split_blocks(out.H.mat(), v);
  out.k_blocks = split_blocks(out.K.mat(), v);
  if (1.0 / m.rcond > kReportCond) {
    std::ostringstream os;
    os << "analytic_hk: condition number " << 1.0 / m.rcond;
    out.warnings.push_back(os.str());
  }
  return out;
}

double tau_from_k(const HittingMaps& maps, const Matrix& rho, Side side) {
  const GoalSubspace& v = maps.v;
  if (rho.rows() != v.ambient_dim()) throw DimensionError("tau_from_k: state dimension mismatch");
  require_density(rho, "tau_from_k");
  const bool in_v = side == Side::InV;
  if (in_v ? !v.supports(rho) : !v.orthogonal_supports(rho))
    throw ValidationError(in_v ? "tau_from_k: state is not supported in V"
                               : "tau_from_k: state is not supported in V-perp");
  const Matrix& k = in_v ? maps.k_blocks.b11 : maps.k_blocks.b12;
  const double tau = real_trace(vec_identity(v.ambient_dim()), k * vec(rho), "tau_from_k");
  if (tau < 1.0 - 1e-9) throw NumericalError("tau_from_k: mean hitting time below one step");
  return tau;
}

double hit_probability(const HittingMaps& maps, const Matrix& rho) {
  const GoalSubspace& v = maps.v;
  if (rho.rows() != v.ambient_dim()) throw DimensionError("hit_probability: dimension mismatch");
  const Index n2 = v.QQ().mat().rows();
  const Matrix pi1 = Matrix::Identity(n2, n2) - v.QQ().mat();
  return real_trace(vec_identity(v.ambient_dim()), pi1 * maps.H.mat() * vec(rho),
                    "hit_probability");
}

FundamentalMap fundamental_map(const SuperOp& s) {
  const ChannelDiagnostics d = diagnose(s);
  if (!d.is_irreducible || !d.fixed_density)
    throw ReducibleError("fundamental_map: channel is not irreducible (fixed space dim " +
                         std::to_string(d.fixed_space_dim) + ")");
  const Index n = s.dim();
  const Index n2 = n * n;
  FundamentalMap out;
  out.pi = *d.fixed_density;
  const Matrix omega = vec(out.pi) * vec_identity(n).transpose();
  const Inverse z = invert(Matrix::Identity(n2, n2) - s.mat() + omega, "fundamental_map");
  out.Z = SuperOp(n, z.inv);
  out.rcond = z.rcond;
  const Matrix a = Matrix::Identity(n2, n2) - s.mat();
  const double scale = std::max(1.0, max_abs(z.inv));
  out.residual = max_abs(a * z.inv * a - a);
  if (out.residual > kGInverseTol * scale * std::max(1.0, max_abs(a)))
    throw NumericalError("fundamental_map: Z is not a g-inverse of I - T");
  if (max_abs(z.inv * vec(out.pi) - vec(out.pi)) > kGInverseTol * scale)
    throw NumericalError("fundamental_map: Z does not fix pi");
  return out;
}

double mhtf_tau(const SuperOp& s, const GoalSubspace& v, const FundamentalMap& z,
                const HittingMaps& maps, const Vector& psi, const Vector& phi) {
  const Index n = s.dim();
  if (psi.size() != n || phi.size() != n) throw DimensionError("mhtf_tau: state length mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-9 || std::abs(phi.norm() - 1.0) > 1e-9)
    throw ValidationError("mhtf_tau: psi and phi must be unit vectors");
  const Matrix rpsi = pure_state(psi);
  const Matrix rphi = pure_state(phi);
  if (!v.supports(rpsi)) throw ValidationError("mhtf_tau: psi is not in V");
  if (!v.orthogonal_supports(rphi)) throw ValidationError("mhtf_tau: phi is not in V-perp");
  const BlockSplit zb = split_blocks(z.Z.mat(), v);
  const Vector y = maps.k_blocks.b11 * (zb.b11 * vec(rpsi) - zb.b12 * vec(rphi));
  return real_trace(vec_identity(n), y, "mhtf_tau");
}

}  // namespace qhit
