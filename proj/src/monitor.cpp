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

#include "qhit/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qhit {

namespace {

// x <- step x; p = <tr| hit y>; x <- miss y
MonitorSeries run_series(const Matrix& step, const Matrix& hit, const Matrix& miss,
                         const Vector& tr, Vector x, const SeriesConfig& cfg) {
  MonitorSeries out;
  const Index n = step.rows();
  const Matrix not_miss = Matrix::Identity(n, n) - miss;
  int quiet = 0;
  long r = 1;
  for (; r <= cfg.max_steps; ++r) {
    const Vector y = step * x;
    const Complex p = tr.dot(hit * y);
    const Complex p_alt = tr.dot(not_miss * y);
    out.max_term_gap = std::max(out.max_term_gap, std::abs(p - p_alt));
    out.max_imag = std::max(out.max_imag, std::abs(p.imag()));
    if (std::abs(p.imag()) > cfg.imag_tol) {
      std::ostringstream os;
      os << "series: step " << r << " has imaginary probability " << p.imag();
      throw NumericalError(os.str());
    }
    const double pr = p.real();
    if (cfg.keep_terms) out.terms.emplace_back(r, pr);
    out.cumulative_prob += pr;
    out.partial_tau += static_cast<double>(r) * pr;
    x = miss * y;
    if (std::abs(static_cast<double>(r) * pr) < cfg.increment_tol) {
      if (++quiet >= cfg.quiet_steps) {
        out.converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  out.truncated_at = std::min(r, cfg.max_steps);
  if (out.converged && out.cumulative_prob < 1.0 - cfg.plateau_gap) out.diverges = true;
  return out;
}

}  // namespace

double MonitorSeries::tau() const {
  if (diverges) return std::numeric_limits<double>::infinity();
  return partial_tau;
}

double step_prob(const SuperOp& s, const GoalSubspace& v, const Matrix& rho, long r) {
  if (r < 1) throw ParameterError("step_prob: r must be >= 1");
  if (s.dim() != v.ambient_dim()) throw DimensionError("step_prob: dimension mismatch");
  require_density(rho, "step_prob");
  if (rho.rows() != s.dim()) throw DimensionError("step_prob: state dimension mismatch");
  Vector x = vec(rho);
  for (long i = 0; i < r; ++i) x = s.mat() * x;
  const Complex p = vec_identity(s.dim()).dot(v.PP().mat() * x);
  if (std::abs(p.imag()) > 1e-10) throw NumericalError("step_prob: complex probability");
  return std::clamp(p.real(), 0.0, 1.0);
}

MonitorSeries first_visit_series(const SuperOp& s, const GoalSubspace& v, const Matrix& rho,
                                 const SeriesConfig& cfg) {
  if (s.dim() != v.ambient_dim()) throw DimensionError("series: dimension mismatch");
  if (rho.rows() != s.dim()) throw DimensionError("series: state dimension mismatch");
  require_density(rho, "series");
  return run_series(s.mat(), v.PP().mat(), v.QQ().mat(), vec_identity(s.dim()), vec(rho), cfg);
}

MonitorSeries site_first_visit_series(const Qmc& q, Index target, const VecState& start,
                                      const SeriesConfig& cfg) {
  if (target < 0 || target >= q.n_sites()) throw DimensionError("series: target site out of range");
  if (start.n_sites() != q.n_sites() || start.internal_dim() != q.internal_dim())
    throw DimensionError("series: start state does not fit the qmc");
  const SiteProjectors sp = site_projectors(q);
  return run_series(q.rep(), sp.p[target], sp.q[target],
                    trace_functional(q.n_sites(), q.internal_dim()), start.data(), cfg);
}

SuperOp generating_function(const SuperOp& s, const GoalSubspace& v, Complex z) {
  if (s.dim() != v.ambient_dim()) throw DimensionError("generating_function: dimension mismatch");
  const Index n2 = s.mat().rows();
  const Matrix qs = v.QQ().mat() * s.mat();
  std::vector<Complex> offending;
  for (Complex l : eigenvalues(qs))
    if (std::abs(Complex(1.0, 0.0) - z * l) < kEigenOneTol) offending.push_back(l);
  if (!offending.empty())
    throw SpectralObstruction("generating_function: I - z QQ S is singular", offending);
  const Inverse inv = invert(Matrix::Identity(n2, n2) - z * qs, "generating_function");
  return SuperOp(s.dim(), z * s.mat() * inv.inv);
}

}  // namespace qhit
