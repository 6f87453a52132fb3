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

#include "qhit/channel.hpp"

#include <cmath>
#include <sstream>

#include "qhit/ginverse.hpp"

namespace qhit {

namespace {

void check_kraus_shapes(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw ValidationError("kraus: empty operator list");
  const Index n = kraus.front().rows();
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    if (kraus[i].rows() != n || kraus[i].cols() != n)
      throw DimensionError("kraus[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                           "x" + std::to_string(n));
    if (!all_finite(kraus[i]))
      throw ValidationError("kraus[" + std::to_string(i) + "]: non-finite entries");
  }
}

// orthonormalize candidates in the vec inner product, keeping at most `keep`
std::vector<Matrix> gram_schmidt(const std::vector<Matrix>& cands, std::size_t keep) {
  std::vector<Matrix> out;
  for (const auto& c : cands) {
    if (out.size() == keep) break;
    Matrix x = c;
    for (const auto& b : out) x -= (b.adjoint() * x).trace() * b;  // <b, x> in Tr(B* X)
    const double nx = x.norm();
    if (nx > 1e-8) out.push_back(x / nx);
  }
  return out;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> kraus, double tol)
    : KrausChannel(Unchecked{}, std::move(kraus)) {
  const double dev = tp_deviation();
  if (!(dev <= tol)) {
    std::ostringstream os;
    os << "kraus: sum V_i* V_i deviates from identity by " << dev;
    throw ValidationError(os.str());
  }
}

KrausChannel::KrausChannel(Unchecked, std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  check_kraus_shapes(kraus_);
  dim_ = kraus_.front().rows();
}

KrausChannel KrausChannel::unitary(const Matrix& u, double tol) {
  return KrausChannel(std::vector<Matrix>{u}, tol);
}

KrausChannel KrausChannel::unchecked(std::vector<Matrix> kraus) {
  return KrausChannel(Unchecked{}, std::move(kraus));
}

double KrausChannel::tp_deviation() const {
  Matrix acc = Matrix::Zero(dim_, dim_);
  for (const auto& v : kraus_) acc += v.adjoint() * v;
  return max_abs(acc - Matrix::Identity(dim_, dim_));
}

SuperOp represent(const KrausChannel& ch) {
  const Index n = ch.dim();
  Matrix m = Matrix::Zero(n * n, n * n);
  for (const auto& v : ch.kraus()) m += kron(v, v.conjugate());
  return SuperOp(n, std::move(m));
}

Index fixed_space_dim(const Matrix& rep) {
  const Index n = rep.rows();
  return n - numerical_rank(rep - Matrix::Identity(n, n));
}

bool is_trace_preserving(const SuperOp& s, double tol) {
  const Vector e = vec_identity(s.dim());
  return max_abs(e.transpose() * s.mat() - e.transpose()) <= tol;
}

bool is_unital(const SuperOp& s, double tol) {
  const Vector e = vec_identity(s.dim());
  return max_abs(s.mat() * e - e) <= tol;
}

Matrix choi_matrix(const SuperOp& s) {
  const Index n = s.dim();
  Matrix c(n * n, n * n);
  // C_{(k,i),(l,j)} = T(|k><l|)_{ij} = mat(i n + j, k n + l)
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index l = 0; l < n; ++l)
        for (Index j = 0; j < n; ++j) c(k * n + i, l * n + j) = s.mat()(i * n + j, k * n + l);
  return c;
}

bool is_completely_positive(const SuperOp& s, double tol) { return is_psd(choi_matrix(s), tol); }

FixedStates fixed_states(const SuperOp& s) {
  FixedStates out;
  const Index n = s.dim();
  const Index n2 = n * n;
  const Matrix a = Matrix::Identity(n2, n2) - s.mat();
  const RankInfo ri = rank_info(a);
  const Index dim = n2 - ri.rank;
  const auto near_one = eigenvalues_near(eigenvalues(s.mat()), Complex(1.0, 0.0));
  if (ri.ambiguous || static_cast<Index>(near_one.size()) != dim)
    out.warnings.push_back("fixed space: rank decision ambiguous (" +
                           std::to_string(near_one.size()) + " eigenvalues near 1, kernel dim " +
                           std::to_string(dim) + ")");
  if (dim == 0) return out;

  std::vector<Matrix> cands;
  // ergodic projection of the maximally mixed state
  try {
    const GroupInverse gi = group_inverse(a);
    const Matrix seed = Matrix::Identity(n, n) / static_cast<double>(n);
    Matrix rho = unvec(gi.ergodic_projector * vec(seed), n, n);
    rho = hermitize(rho);
    const Complex tr = rho.trace();
    if (std::abs(tr) > 1e-9) {
      rho /= tr.real();
      if (is_psd(rho)) {
        out.has_density = true;
        cands.push_back(rho);
      }
    }
  } catch (const Error& e) {
    out.warnings.push_back(std::string("fixed density: ") + e.what());
  }

  const Matrix ns = null_space(a);
  for (Index c = 0; c < ns.cols(); ++c) {
    const Matrix x = unvec(ns.col(c), n, n);
    cands.push_back(hermitize(x));
    cands.push_back((x - x.adjoint()) / Complex(0.0, 2.0));
  }
  std::vector<Matrix> basis = gram_schmidt(cands, static_cast<std::size_t>(dim));
  if (out.has_density) basis.front() = cands.front();  // keep the trace normalization
  out.states = std::move(basis);
  return out;
}

ChannelDiagnostics diagnose(const SuperOp& s, double tol) {
  ChannelDiagnostics d;
  const Index n = s.dim();
  const Index n2 = n * n;
  const Vector e = vec_identity(n);
  d.tp_deviation = max_abs(e.transpose() * s.mat() - e.transpose());
  d.is_trace_preserving = d.tp_deviation <= tol;
  d.unital_deviation = max_abs(s.mat() * e - e);
  d.is_unital = d.unital_deviation <= tol;
  d.is_completely_positive = is_completely_positive(s);

  const auto spec = eigenvalues(s.mat());
  for (Complex l : spec) {
    d.spectral_radius = std::max(d.spectral_radius, std::abs(l));
    if (std::abs(l) > 1.0 - kEigenOneTol) d.peripheral_eigenvalues.push_back(l);
  }
  if (d.is_trace_preserving && d.spectral_radius > 1.0 + kEigenOneTol)
    d.warnings.push_back("spectral radius exceeds 1 for a trace preserving map");

  const Matrix a = s.mat() - Matrix::Identity(n2, n2);
  const Index r1 = numerical_rank(a);
  const Index r2 = numerical_rank(a * a);
  d.jordan_trivial_at_1 = r1 == r2;
  d.fixed_space_dim = n2 - r1;

  const FixedStates fs = fixed_states(s);
  d.warnings.insert(d.warnings.end(), fs.warnings.begin(), fs.warnings.end());
  if (fs.has_density) {
    d.fixed_density = fs.states.front();
    d.min_fixed_eigenvalue = min_hermitian_eigenvalue(*d.fixed_density);
  }
  d.is_irreducible = d.fixed_space_dim == 1 && fs.has_density &&
                     d.min_fixed_eigenvalue > kFaithfulTol;
  return d;
}

ChannelDiagnostics validate(const KrausChannel& ch, double tol) {
  ChannelDiagnostics d = diagnose(represent(ch), tol);
  d.tp_deviation = std::max(d.tp_deviation, ch.tp_deviation());
  d.is_trace_preserving = d.tp_deviation <= tol;
  return d;
}

GoalSubspace::GoalSubspace(Matrix basis, double tol) : basis_(std::move(basis)) {
  const Index n = basis_.rows();
  const Index d = basis_.cols();
  if (n == 0 || d == 0) throw DimensionError("subspace: empty basis");
  if (d > n) throw DimensionError("subspace: more basis vectors than the ambient dimension");
  if (!all_finite(basis_)) throw ValidationError("subspace: non-finite basis entries");
  const double dev = max_abs(basis_.adjoint() * basis_ - Matrix::Identity(d, d));
  if (dev > tol)
    throw ValidationError("subspace: basis is not orthonormal (deviation " + std::to_string(dev) +
                          ")");
  p_ = basis_ * basis_.adjoint();
  q_ = Matrix::Identity(n, n) - p_;
  pp_ = SuperOp(n, kron(p_, p_.conjugate()));
  qq_ = SuperOp(n, kron(q_, q_.conjugate()));
  rr_ = SuperOp(n, kron(p_, q_.conjugate()) + kron(q_, p_.conjugate()));
}

GoalSubspace GoalSubspace::spanned_by(const std::vector<Vector>& vectors) {
  if (vectors.empty()) throw DimensionError("subspace: empty basis");
  const Index n = vectors.front().size();
  Matrix m(n, static_cast<Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n)
      throw DimensionError("subspace: basis vector " + std::to_string(i) + " has length " +
                           std::to_string(vectors[i].size()) + ", expected " + std::to_string(n));
    m.col(static_cast<Index>(i)) = vectors[i];
  }
  const RankInfo ri = rank_info(m);
  if (ri.rank != m.cols()) throw ValidationError("subspace: basis vectors are linearly dependent");
  // modified Gram-Schmidt keeps the first vector's direction and phase
  Matrix b(n, m.cols());
  for (Index c = 0; c < m.cols(); ++c) {
    Vector x = m.col(c);
    for (Index p = 0; p < c; ++p) x -= b.col(p).dot(x) * b.col(p);
    b.col(c) = x / x.norm();
  }
  return GoalSubspace(b);
}

bool GoalSubspace::supports(const Matrix& rho, double tol) const {
  if (rho.rows() != ambient_dim() || rho.cols() != ambient_dim()) return false;
  return max_abs(rho - p_ * rho * p_) <= tol;
}

bool GoalSubspace::orthogonal_supports(const Matrix& rho, double tol) const {
  if (rho.rows() != ambient_dim() || rho.cols() != ambient_dim()) return false;
  return max_abs(rho - q_ * rho * q_) <= tol;
}

AssumptionOne assumption_one(const SuperOp& s, const GoalSubspace& v, double tol) {
  if (s.dim() != v.ambient_dim())
    throw DimensionError("assumption_one: channel and subspace dimensions differ");
  AssumptionOne out;
  out.spectrum = eigenvalues(v.QQ().mat() * s.mat());
  out.offending = eigenvalues_near(out.spectrum, Complex(1.0, 0.0), tol);
  out.holds = out.offending.empty();
  return out;
}

SuperOp randomize(const SuperOp& s1, const SuperOp& s2, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("randomize: p outside [0, 1]");
  if (s1.dim() != s2.dim()) throw DimensionError("randomize: channel dimensions differ");
  return SuperOp(s1.dim(), p * s1.mat() + (1.0 - p) * s2.mat());
}

Matrix pure_state(const Vector& psi) { return psi * psi.adjoint(); }

bool is_density(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.size() == 0 || !all_finite(rho)) return false;
  if (max_abs(rho - rho.adjoint()) > 1e-9) return false;
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9) return false;
  return is_psd(rho, tol);
}

void require_density(const Matrix& rho, const std::string& what, double tol) {
  if (rho.rows() != rho.cols()) throw DimensionError(what + ": state is not square");
  if (!is_density(rho, tol))
    throw ValidationError(what + ": not a density matrix (Hermitian, PSD, trace 1)");
}

}  // namespace qhit
