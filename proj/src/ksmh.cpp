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

#include "qhit/ksmh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qhit/hitting.hpp"

namespace qhit {

namespace {

// divergent coefficients below this (relative to |Phi|) are treated as zero
constexpr double kDivergentTol = 1e-9;

Matrix block_of(const Matrix& m, Index i, Index j, Index b) { return m.block(i * b, j * b, b, b); }

SiteHitting site_hitting(const Qmc& q, Index i) {
  SiteHitting sh;
  sh.site = i;
  sh.requested = true;
  const Index n = q.order();
  const Index b = q.block_size();
  const Matrix& phi = q.rep();
  const Matrix qi = site_projectors(q).q[i];
  const Matrix c = qi * phi;
  const Matrix bm = Matrix::Identity(n, n) - c;
  sh.offending = eigenvalues_near(eigenvalues(c), Complex(1.0, 0.0));
  sh.block_available.assign(static_cast<std::size_t>(q.n_sites()), false);

  if (sh.offending.empty()) {
    try {
      const Inverse m = invert(bm, "qmc_hitting_operators");
      sh.k = phi * m.inv * m.inv;
      sh.status = BlockStatus::Regular;
      std::fill(sh.block_available.begin(), sh.block_available.end(), true);
      return sh;
    } catch (const NumericalError&) {
      // fall through to the singular branch
    }
  }

  // 1 in spec(QQ_i Phi)
  GroupInverse gi;
  try {
    gi = group_inverse(bm);
  } catch (const Error&) {
    return sh;  // defective at 1, no finite part
  }
  const Matrix div = phi * gi.ergodic_projector;
  const double scale = std::max(1.0, max_abs(phi));
  bool any = false;
  for (Index j = 0; j < q.n_sites(); ++j) {
    const double cj = max_abs(block_of(div, i, j, b));
    if (j == i) sh.divergent_coefficient = cj;
    sh.block_available[j] = cj <= kDivergentTol * scale;
    any = any || sh.block_available[j];
  }
  if (!any) return sh;
  sh.k = phi * gi.asharp * gi.asharp;
  sh.status = BlockStatus::AbelFinitePart;
  return sh;
}

double real_trace(const Vector& y, Index k, const char* what) {
  const Complex t = vec_identity(k).dot(y);
  if (std::abs(t.imag()) > 1e-9) {
    std::ostringstream os;
    os << what << ": trace has imaginary part " << t.imag();
    throw NumericalError(os.str());
  }
  return t.real();
}

void require_v_perp_density(const GoalSubspace& v, const Matrix& rho) {
  if (rho.rows() != v.ambient_dim() || rho.cols() != v.ambient_dim())
    throw DimensionError("tau_channel: state dimension mismatch");
  require_density(rho, "tau_channel");
  if (!v.orthogonal_supports(rho))
    throw ValidationError("tau_channel: initial state is not supported in V-perp");
}

// polynomial through (x_i, y_i) evaluated at 0
Matrix lagrange_at_zero(const std::vector<double>& x, const std::vector<Matrix>& y) {
  Matrix out = Matrix::Zero(y.front().rows(), y.front().cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) w *= x[j] / (x[j] - x[i]);
    out += w * y[i];
  }
  return out;
}

}  // namespace

std::string to_string(BlockStatus s) {
  switch (s) {
    case BlockStatus::Regular: return "regular";
    case BlockStatus::AbelFinitePart: return "abel-finite-part";
    case BlockStatus::Unavailable: return "unavailable";
  }
  return "unavailable";
}

bool QmcHittingOperators::available(Index i, Index j) const {
  if (i < 0 || j < 0 || i >= n_sites || j >= n_sites) return false;
  const SiteHitting& sh = sites[static_cast<std::size_t>(i)];
  return sh.status != BlockStatus::Unavailable && sh.block_available[j];
}

Matrix QmcHittingOperators::block(Index i, Index j) const {
  if (i < 0 || j < 0 || i >= n_sites || j >= n_sites)
    throw DimensionError("hitting operators: site index out of range");
  if (!available(i, j))
    throw SpectralObstruction("hitting operators: K_" + std::to_string(i) + std::to_string(j) +
                                  " is not available",
                              sites[static_cast<std::size_t>(i)].offending);
  return block_of(sites[static_cast<std::size_t>(i)].k, i, j, k * k);
}

QmcHittingOperators qmc_hitting_operators(const Qmc& q, const std::vector<Index>& targets) {
  QmcHittingOperators ops;
  ops.n_sites = q.n_sites();
  ops.k = q.internal_dim();
  const Index b = q.block_size();
  ops.sites.resize(static_cast<std::size_t>(q.n_sites()));
  for (Index i = 0; i < q.n_sites(); ++i) {
    ops.sites[i].site = i;
    ops.sites[i].block_available.assign(static_cast<std::size_t>(q.n_sites()), false);
  }
  for (Index i : targets) {
    if (i < 0 || i >= q.n_sites()) throw DimensionError("hitting operators: target out of range");
    ops.sites[i] = site_hitting(q, i);
  }
  ops.d = Matrix::Zero(q.order(), q.order());
  for (Index i = 0; i < q.n_sites(); ++i)
    if (ops.available(i, i)) ops.d.block(i * b, i * b, b, b) = ops.block(i, i);
  return ops;
}

QmcHittingOperators qmc_hitting_operators(const Qmc& q) {
  std::vector<Index> all;
  for (Index i = 0; i < q.n_sites(); ++i) all.push_back(i);
  return qmc_hitting_operators(q, all);
}

Matrix diag_blocks(const Matrix& m, Index n_sites, Index k) {
  const Index b = k * k;
  if (m.rows() != n_sites * b || m.cols() != n_sites * b)
    throw DimensionError("diag_blocks: matrix does not have the n_sites k^2 block structure");
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (Index i = 0; i < n_sites; ++i) out.block(i * b, i * b, b, b) = m.block(i * b, i * b, b, b);
  return out;
}

Matrix hitting_matrix(const QmcHittingOperators& ops) {
  const Index b = ops.k * ops.k;
  Matrix out(ops.n_sites * b, ops.n_sites * b);
  for (Index i = 0; i < ops.n_sites; ++i)
    for (Index j = 0; j < ops.n_sites; ++j) out.block(i * b, j * b, b, b) = ops.block(i, j);
  return out;
}

std::string to_string(KernelVariant v) {
  switch (v) {
    case KernelVariant::OmegaCorrected: return "omega-corrected";
    case KernelVariant::Hunter: return "hunter";
    case KernelVariant::Group: return "group";
  }
  return "hunter";
}

Matrix KsmhKernel::block(Index i, Index j) const {
  if (i < 0 || j < 0 || i >= n_sites || j >= n_sites)
    throw DimensionError("kernel: block index out of range");
  return block_of(kernel, i, j, k * k);
}

KsmhKernel ksmh_kernel(const Matrix& d, const Matrix& g, const std::optional<Matrix>& omega,
                       Index n_sites, Index k, KernelVariant variant) {
  const Index n = n_sites * k * k;
  for (const Matrix* m : {&d, &g})
    if (m->rows() != n || m->cols() != n)
      throw DimensionError("ksmh_kernel: expected order " + std::to_string(n));
  const Matrix e = block_constant_E(n_sites, k);
  const Matrix id = Matrix::Identity(n, n);
  Matrix inner = id - g + diag_blocks(g, n_sites, k) * e;
  if (variant == KernelVariant::OmegaCorrected) {
    if (!omega) throw ParameterError("ksmh_kernel: the omega-corrected variant needs the fixed map");
    if (omega->rows() != n || omega->cols() != n)
      throw DimensionError("ksmh_kernel: omega has the wrong order");
    const Matrix og = *omega * g;
    inner += og - diag_blocks(og, n_sites, k) * e;
  }
  KsmhKernel out;
  out.kernel = d * inner;
  out.variant = variant;
  out.n_sites = n_sites;
  out.k = k;
  if (!all_finite(out.kernel)) throw NumericalError("ksmh_kernel: non-finite kernel");
  return out;
}

bool short_kernel_applies(const HunterParams& p, Index n_sites, Index k) {
  const Index b = k * k;
  if (p.u.size() != n_sites * b || p.f.size() != n_sites * b)
    throw DimensionError("short_kernel_applies: parameter length mismatch");
  const Vector e = trace_functional(n_sites, k);
  const Complex c = e.dot(p.u) / e.squaredNorm();
  const double tol = 1e-12 * std::max(1.0, p.u.norm());
  if ((p.u - c * e).norm() > tol) return false;
  const Vector f0 = p.f.segment(0, b);
  for (Index j = 1; j < n_sites; ++j)
    if ((p.f.segment(j * b, b) - f0).norm() > 1e-12 * std::max(1.0, p.f.norm())) return false;
  return true;
}

double kernel_tau(const KsmhKernel& kernel, Index i, Index j, const Matrix& rho_j) {
  if (rho_j.rows() != kernel.k || rho_j.cols() != kernel.k)
    throw DimensionError("kernel_tau: site state must be k x k");
  return real_trace(kernel.block(i, j) * vec(rho_j), kernel.k, "kernel_tau");
}

double tau_irreducible_qmc(const Qmc& q, const KsmhKernel& kernel, Index i, Index j,
                           const Matrix& rho_j) {
  if (kernel.n_sites != q.n_sites() || kernel.k != q.internal_dim())
    throw DimensionError("tau_irreducible_qmc: kernel does not fit the qmc");
  const Index d = fixed_space_dim(q);
  if (d != 1)
    throw ReducibleError("tau_irreducible_qmc: qmc fixed space has dimension " + std::to_string(d));
  return kernel_tau(kernel, i, j, rho_j);
}

Matrix first_step_operator_l(const Qmc& q, const QmcHittingOperators& ops) {
  const Matrix k = hitting_matrix(ops);
  return k - (k - ops.d) * q.rep();
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Series: return "series";
    case Method::AnalyticK: return "analytic";
    case Method::KsmhGinverse: return "ksmh-g";
    case Method::KsmhGroup: return "ksmh-group";
  }
  return "series";
}

std::optional<Method> method_from_string(const std::string& s) {
  if (s == "series") return Method::Series;
  if (s == "analytic" || s == "analytic-K") return Method::AnalyticK;
  if (s == "ksmh-g" || s == "ksmh-ginverse") return Method::KsmhGinverse;
  if (s == "ksmh-group") return Method::KsmhGroup;
  return std::nullopt;
}

TauReport tau_channel(const SuperOp& s, const GoalSubspace& v, const Matrix& rho, Method method,
                      const TauOptions& opts) {
  if (s.dim() != v.ambient_dim()) throw DimensionError("tau_channel: dimension mismatch");
  TauReport rep;
  rep.method = method;
  auto keep = [&](const char* name, const Matrix& m) {
    if (opts.keep_artifacts) rep.artifacts.emplace_back(name, m);
  };

  if (method == Method::Series) {
    require_density(rho, "tau_channel");
    rep.verified.push_back("density");
    MonitorSeries ms = first_visit_series(s, v, rho, opts.series);
    rep.tau = ms.tau();
    if (ms.diverges) rep.notes.push_back("hitting probability below one; tau is infinite");
    if (!ms.converged) rep.notes.push_back("series truncated before convergence; tau is a partial sum");
    ms.terms.clear();
    rep.series = std::move(ms);
    return rep;
  }

  require_v_perp_density(v, rho);
  rep.verified.push_back("density");
  rep.verified.push_back("support in V-perp");

  if (method == Method::AnalyticK) {
    const HittingMaps maps = analytic_hk(s, v);
    rep.verified.push_back("assumption I");
    rep.notes.insert(rep.notes.end(), maps.warnings.begin(), maps.warnings.end());
    keep("H", maps.H.mat());
    keep("K", maps.K.mat());
    rep.tau = tau_from_k(maps, rho, Side::InVPerp);
    return rep;
  }

  const Qmc q = induce(s, v);
  keep("Phi", q.rep());
  const Index n = q.order();

  if (method == Method::KsmhGinverse) {
    const ChannelDiagnostics d = diagnose(s);
    if (!d.is_irreducible)
      throw ReducibleError("tau_channel: ksmh-g needs an irreducible channel (fixed space dim " +
                           std::to_string(d.fixed_space_dim) + ")");
    rep.verified.push_back("irreducible");
    const QmcHittingOperators ops = qmc_hitting_operators(q, {0});
    if (!ops.d_available(0))
      throw SpectralObstruction("tau_channel: D_11 is not available",
                                ops.sites[0].offending);
    const HunterParams params = opts.hunter ? *opts.hunter : default_hunter_params(q);
    const GInverse g = hunter_ginverse(q, params);
    rep.verified.push_back("g-inverse residual");
    KsmhKernel ker;
    if (short_kernel_applies(params, 2, s.dim())) {
      ker = ksmh_kernel(ops.d, g.g, std::nullopt, 2, s.dim(), KernelVariant::Hunter);
    } else {
      ker = ksmh_kernel(ops.d, g.g, fixed_map(q).omega, 2, s.dim(), KernelVariant::OmegaCorrected);
      rep.notes.push_back("Hunter parameters outside the short-kernel family; omega-corrected kernel used");
    }
    keep("D", ops.d);
    keep("G", g.g);
    keep("kernel", ker.kernel);
    rep.tau = kernel_tau(ker, 0, 1, rho);
    return rep;
  }

  // group inverse route
  const AssumptionOne a1 = assumption_one(s, v);
  if (!a1.holds)
    throw SpectralObstruction("tau_channel: 1 is an eigenvalue of QQ S (Assumption I fails)",
                              a1.offending);
  rep.verified.push_back("assumption I");
  const GroupInverse gi = group_inverse(Matrix::Identity(n, n) - q.rep());
  rep.verified.push_back("group inverse axioms");
  rep.notes.insert(rep.notes.end(), gi.warnings.begin(), gi.warnings.end());
  const QmcHittingOperators ops = qmc_hitting_operators(q, {0, 1});
  if (!ops.d_available(0))
    throw SpectralObstruction("tau_channel: D_11 is not available", ops.sites[0].offending);
  if (ops.sites[1].status == BlockStatus::AbelFinitePart && ops.d_available(1))
    rep.notes.push_back("D_22 taken as the Abel finite part");
  else if (!ops.d_available(1))
    rep.notes.push_back("D_22 unavailable, left zero");
  const KsmhKernel ker = ksmh_kernel(ops.d, gi.asharp, std::nullopt, 2, s.dim(), KernelVariant::Group);
  keep("D", ops.d);
  keep("A_sharp", gi.asharp);
  keep("kernel", ker.kernel);
  rep.tau = kernel_tau(ker, 0, 1, rho);
  return rep;
}

KernelLimitStudy kernel_limit_study(const SuperOp& t, const SuperOp& m_prime,
                                    const GoalSubspace& v, const Matrix& rho,
                                    const std::vector<double>& p_values,
                                    const std::optional<HunterParams>& params) {
  require_v_perp_density(v, rho);
  KernelLimitStudy out;
  if (params && !short_kernel_applies(*params, 2, v.ambient_dim()))
    out.notes.push_back("Hunter parameters outside the short-kernel family; omega-corrected kernel used");
  for (double p : p_values) {
    if (!(p > 0.0 && p <= 1.0)) {
      out.notes.push_back("skipped p outside (0, 1]");
      continue;
    }
    const SuperOp sp = randomize(t, m_prime, p);
    const Qmc q = induce(sp, v);
    const Index n = q.order();
    const QmcHittingOperators ops = qmc_hitting_operators(q, {0, 1});
    const HunterParams hp = params ? *params : default_hunter_params(q);
    const GInverse g = hunter_ginverse(q, hp);
    const KsmhKernel h =
        short_kernel_applies(hp, 2, v.ambient_dim())
            ? ksmh_kernel(ops.d, g.g, std::nullopt, 2, v.ambient_dim(), KernelVariant::Hunter)
            : ksmh_kernel(ops.d, g.g, fixed_map(q).omega, 2, v.ambient_dim(),
                          KernelVariant::OmegaCorrected);
    const GroupInverse gi = group_inverse(Matrix::Identity(n, n) - q.rep());
    const KsmhKernel hd = ksmh_kernel(ops.d, gi.asharp, std::nullopt, 2, v.ambient_dim(), KernelVariant::Group);
    LimitRow row;
    row.p = p;
    row.tau = kernel_tau(h, 0, 1, rho);
    row.tau_group = kernel_tau(hd, 0, 1, rho);
    row.g_norm = frobenius(g.g);
    row.kernel_gap = max_abs(h.kernel - hd.kernel);
    row.g = g.g;
    row.h = h.kernel;
    row.h_group = hd.kernel;
    out.rows.push_back(std::move(row));
  }

  std::vector<const LimitRow*> by_p;
  for (const auto& r : out.rows) by_p.push_back(&r);
  std::sort(by_p.begin(), by_p.end(), [](const LimitRow* a, const LimitRow* b) { return a->p > b->p; });
  if (by_p.size() >= 2) {
    bool monotone = true;
    for (std::size_t i = 1; i < by_p.size(); ++i)
      if (!(by_p[i]->g_norm > by_p[i - 1]->g_norm)) monotone = false;
    out.g_growth = by_p.back()->g_norm / by_p.front()->g_norm;
    out.g_diverges = monotone && out.g_growth > 10.0;
  }
  if (by_p.size() >= 2) {
    const std::size_t m = std::min<std::size_t>(3, by_p.size());
    std::vector<double> xs;
    std::vector<Matrix> hs, taus;
    for (std::size_t i = by_p.size() - m; i < by_p.size(); ++i) {
      xs.push_back(by_p[i]->p);
      hs.push_back(by_p[i]->h);
      taus.push_back(Matrix::Constant(1, 1, Complex(by_p[i]->tau, 0.0)));
    }
    out.h0_extrapolated = lagrange_at_zero(xs, hs);
    out.tau0_extrapolated = lagrange_at_zero(xs, taus)(0, 0).real();
  } else {
    out.notes.push_back("fewer than two p values; no extrapolation");
  }

  // p = 0 directly through the group inverse
  out.assumption_one_at_0 = assumption_one(m_prime, v).holds;
  try {
    const Qmc q0 = induce(m_prime, v);
    const Index n = q0.order();
    const GroupInverse gi = group_inverse(Matrix::Identity(n, n) - q0.rep());
    out.a0_sharp = gi.asharp;
    const QmcHittingOperators ops = qmc_hitting_operators(q0, {0, 1});
    const KsmhKernel h0 = ksmh_kernel(ops.d, gi.asharp, std::nullopt, 2, v.ambient_dim(), KernelVariant::Group);
    out.h0_direct = h0.kernel;
    if (!ops.d_available(0)) throw SpectralObstruction("D_11 unavailable at p = 0", ops.sites[0].offending);
    out.tau0_direct = kernel_tau(h0, 0, 1, rho);
    if (out.h0_extrapolated.size() > 0) out.h_gap = max_abs(out.h0_extrapolated - out.h0_direct);
  } catch (const Error& e) {
    out.notes.push_back(std::string("p = 0: ") + e.what());
  }
  return out;
}

}  // namespace qhit
