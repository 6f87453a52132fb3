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

#include "qhit/qmc.hpp"

#include <random>
#include <sstream>

#include "qhit/ginverse.hpp"

namespace qhit {

Qmc::Qmc(Index n_sites, Index k, Matrix rep, double tol)
    : n_sites_(n_sites), k_(k), rep_(std::move(rep)) {
  if (n_sites < 1 || k < 1) throw DimensionError("qmc: need at least one site and k >= 1");
  const Index n = order();
  if (rep_.rows() != n || rep_.cols() != n)
    throw DimensionError("qmc: representation must be of order n_sites k^2 = " +
                         std::to_string(n));
  if (!all_finite(rep_)) throw ValidationError("qmc: non-finite entries");
  const Vector e = trace_functional(n_sites, k);
  const double dev = max_abs(e.transpose() * rep_ - e.transpose());
  if (dev > tol) {
    std::ostringstream os;
    os << "qmc: not trace preserving, |<e_I| Phi - <e_I|| = " << dev;
    throw ValidationError(os.str());
  }
}

Matrix Qmc::block(Index i, Index j) const {
  if (i < 0 || j < 0 || i >= n_sites_ || j >= n_sites_)
    throw DimensionError("qmc: block index out of range");
  const Index b = block_size();
  return rep_.block(i * b, j * b, b, b);
}

SuperOp Qmc::block_superop(Index i, Index j) const { return SuperOp(k_, block(i, j)); }

Vector trace_functional(Index n_sites, Index k) {
  const Vector e = vec_identity(k);
  Vector out(n_sites * k * k);
  for (Index i = 0; i < n_sites; ++i) out.segment(i * k * k, k * k) = e;
  return out;
}

Qmc from_oqw(const std::vector<std::vector<Matrix>>& b, double tol) {
  const Index n = static_cast<Index>(b.size());
  if (n == 0) throw DimensionError("oqw: empty grid");
  const Index k = b[0].empty() ? 0 : b[0][0].rows();
  for (const auto& row : b)
    if (static_cast<Index>(row.size()) != n) throw DimensionError("oqw: grid is not square");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (b[i][j].rows() != k || b[i][j].cols() != k)
        throw DimensionError("oqw: block (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is not " + std::to_string(k) + "x" + std::to_string(k));
  for (Index j = 0; j < n; ++j) {
    Matrix acc = Matrix::Zero(k, k);
    for (Index i = 0; i < n; ++i) acc += b[i][j].adjoint() * b[i][j];
    const double dev = max_abs(acc - Matrix::Identity(k, k));
    if (dev > tol)
      throw ValidationError("oqw: column " + std::to_string(j) +
                            " violates sum_i B_ij* B_ij = I (deviation " + std::to_string(dev) +
                            ")");
  }
  const Index k2 = k * k;
  Matrix rep(n * k2, n * k2);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) rep.block(i * k2, j * k2, k2, k2) = kron(b[i][j], b[i][j].conjugate());
  return Qmc(n, k, std::move(rep), tol);
}

Qmc from_blocks(const std::vector<std::vector<SuperOp>>& blocks, double tol) {
  const Index n = static_cast<Index>(blocks.size());
  if (n == 0) throw DimensionError("qmc: empty grid");
  const Index k = blocks[0].empty() ? 0 : blocks[0][0].dim();
  const Index k2 = k * k;
  Matrix rep(n * k2, n * k2);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(blocks[i].size()) != n) throw DimensionError("qmc: grid is not square");
    for (Index j = 0; j < n; ++j) {
      if (blocks[i][j].dim() != k) throw DimensionError("qmc: block dimensions differ");
      rep.block(i * k2, j * k2, k2, k2) = blocks[i][j].mat();
    }
  }
  return Qmc(n, k, std::move(rep), tol);
}

Qmc induce(const SuperOp& s, const GoalSubspace& v) {
  if (s.dim() != v.ambient_dim())
    throw DimensionError("induce: channel and subspace dimensions differ");
  const Index n2 = s.mat().rows();
  const Matrix top = (Matrix::Identity(n2, n2) - v.QQ().mat()) * s.mat();
  const Matrix bot = v.QQ().mat() * s.mat();
  Matrix rep(2 * n2, 2 * n2);
  rep << top, top, bot, bot;
  return Qmc(2, s.dim(), std::move(rep));
}

VecState::VecState(Index n_sites, Index k, Vector data) : n_sites_(n_sites), k_(k), data_(std::move(data)) {
  if (data_.size() != n_sites * k * k)
    throw DimensionError("vecstate: length must be n_sites k^2");
}

VecState VecState::at_site(Index n_sites, Index site, const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw DimensionError("vecstate: site state is not square");
  if (site < 0 || site >= n_sites) throw DimensionError("vecstate: site out of range");
  const Index k = rho.rows();
  Vector d = Vector::Zero(n_sites * k * k);
  d.segment(site * k * k, k * k) = vec(rho);
  return VecState(n_sites, k, std::move(d));
}

VecState VecState::from_sites(const std::vector<Matrix>& rhos) {
  if (rhos.empty()) throw DimensionError("vecstate: no sites");
  const Index n = static_cast<Index>(rhos.size());
  const Index k = rhos[0].rows();
  Vector d(n * k * k);
  for (Index i = 0; i < n; ++i) {
    if (rhos[i].rows() != k || rhos[i].cols() != k)
      throw DimensionError("vecstate: site blocks differ in size");
    d.segment(i * k * k, k * k) = vec(rhos[i]);
  }
  return VecState(n, k, std::move(d));
}

Matrix VecState::site(Index i) const {
  if (i < 0 || i >= n_sites_) throw DimensionError("vecstate: site out of range");
  return unvec(data_.segment(i * k_ * k_, k_ * k_), k_, k_);
}

Complex VecState::total_trace() const { return trace_functional(n_sites_, k_).dot(data_); }

bool VecState::is_density(double tol) const {
  if (std::abs(total_trace() - Complex(1.0, 0.0)) > 1e-9) return false;
  for (Index i = 0; i < n_sites_; ++i) {
    const Matrix r = site(i);
    if (max_abs(r - r.adjoint()) > 1e-9 || !is_psd(r, tol)) return false;
  }
  return true;
}

Index fixed_space_dim(const Qmc& q) { return fixed_space_dim(q.rep()); }

VecState stationary_density(const Qmc& q) {
  const Index n = q.order();
  const Index k = q.internal_dim();
  const GroupInverse gi = group_inverse(Matrix::Identity(n, n) - q.rep());
  std::vector<Matrix> seed(static_cast<std::size_t>(q.n_sites()),
                           Matrix::Identity(k, k) / static_cast<double>(k * q.n_sites()));
  Vector x = gi.ergodic_projector * VecState::from_sites(seed).data();
  const Complex tr = trace_functional(q.n_sites(), k).dot(x);
  if (std::abs(tr) < 1e-12) throw NumericalError("stationary_density: fixed space holds no density");
  x /= tr;
  // absorb roundoff
  for (Index i = 0; i < q.n_sites(); ++i) {
    const Matrix r = hermitize(unvec(x.segment(i * k * k, k * k), k, k));
    x.segment(i * k * k, k * k) = vec(r);
  }
  return VecState(q.n_sites(), k, std::move(x));
}

FixedMap fixed_map(const Qmc& q) {
  const Index d = fixed_space_dim(q);
  if (d != 1)
    throw ReducibleError("fixed_map: fixed space has dimension " + std::to_string(d) +
                         "; use the group inverse route");
  FixedMap out;
  out.pi = stationary_density(q);
  out.omega = out.pi.data() * trace_functional(q.n_sites(), q.internal_dim()).transpose();
  return out;
}

SiteProjectors site_projectors(Index n_sites, Index k) {
  SiteProjectors out;
  const Index b = k * k;
  const Index n = n_sites * b;
  for (Index i = 0; i < n_sites; ++i) {
    Matrix p = Matrix::Zero(n, n);
    p.block(i * b, i * b, b, b) = Matrix::Identity(b, b);
    out.q.push_back(Matrix::Identity(n, n) - p);
    out.p.push_back(std::move(p));
  }
  return out;
}

SiteProjectors site_projectors(const Qmc& q) { return site_projectors(q.n_sites(), q.internal_dim()); }

Matrix block_constant_E(Index n_sites, Index k) {
  const Index b = k * k;
  Matrix e(n_sites * b, n_sites * b);
  for (Index i = 0; i < n_sites; ++i)
    for (Index j = 0; j < n_sites; ++j) e.block(i * b, j * b, b, b) = Matrix::Identity(b, b);
  return e;
}

Matrix block_constant_E(const Qmc& q) { return block_constant_E(q.n_sites(), q.internal_dim()); }

bool positive_on_samples(const Qmc& q, int samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  const Index k = q.internal_dim();
  for (int s = 0; s < samples; ++s) {
    Matrix g(k, k);
    for (Index i = 0; i < g.size(); ++i) g.data()[i] = Complex(nd(rng), nd(rng));
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    for (Index i = 0; i < q.n_sites(); ++i)
      for (Index j = 0; j < q.n_sites(); ++j)
        if (!is_psd(unvec(q.block(i, j) * vec(rho), k, k), tol)) return false;
  }
  return true;
}

}  // namespace qhit
