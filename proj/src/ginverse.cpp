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

#include "qhit/ginverse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qhit/channel.hpp"
#include "qhit/qmc.hpp"

namespace qhit {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(what) + ": matrix is not square");
}

double scale_of(const Matrix& a) { return std::max(1.0, max_abs(a)); }

}  // namespace

IndexInfo index_info(const Matrix& a) {
  require_square(a, "index");
  IndexInfo info;
  const Index n = a.rows();
  Matrix pw = Matrix::Identity(n, n);
  info.ranks.push_back(n);
  for (int m = 0; m <= n; ++m) {
    pw = pw * a;
    const RankInfo ri = rank_info(pw);
    info.ambiguous = info.ambiguous || ri.ambiguous;
    info.ranks.push_back(ri.rank);
    if (info.ranks[m + 1] == info.ranks[m]) {
      info.index = m;
      return info;
    }
  }
  info.index = static_cast<int>(n);
  return info;
}

int matrix_index(const Matrix& a) { return index_info(a).index; }

double group_axiom_residual(const Matrix& a, const Matrix& x) {
  const double r1 = max_abs(a * x * a - a);
  const double r2 = max_abs(x * a * x - x);
  const double r3 = max_abs(a * x - x * a);
  return std::max({r1, r2, r3});
}

GroupInverse group_inverse(const Matrix& a) {
  require_square(a, "group_inverse");
  GroupInverse out;
  out.a = a;
  const Index n = a.rows();
  const IndexInfo ii = index_info(a);
  out.index = ii.index;
  if (ii.ambiguous) out.warnings.push_back("index: rank decision ambiguous");
  if (ii.index >= 2)
    throw NoGroupInverse("group_inverse: index " + std::to_string(ii.index) +
                             " >= 2, no group inverse",
                         ii.index);

  const Matrix ker = null_space(a);
  const Index k = ker.cols();
  if (k == 0) {
    const Inverse inv = invert(a, "group_inverse");
    out.asharp = inv.inv;
    out.split_condition = 1.0 / inv.rcond;
  } else if (k == n) {
    out.asharp = Matrix::Zero(n, n);
  } else {
    const Matrix w = complete_unitary(ker);
    const Matrix m = w.adjoint() * a * w;
    const Matrix b = m.topRightCorner(k, n - k);
    const Matrix c = m.bottomRightCorner(n - k, n - k);
    const Inverse ci = invert(c, "group_inverse range block");
    out.split_condition = 1.0 / ci.rcond;
    Matrix r = Matrix::Zero(n, n);
    r.topRightCorner(k, n - k) = b * ci.inv * ci.inv;
    r.bottomRightCorner(n - k, n - k) = ci.inv;
    out.asharp = w * r * w.adjoint();
  }
  if (out.split_condition > kSplitCondWarn)
    out.warnings.push_back("group_inverse: range block is ill conditioned");
  out.ergodic_projector = Matrix::Identity(n, n) - out.asharp * a;
  out.residual = group_axiom_residual(a, out.asharp);
  const double xs = std::max(1.0, max_abs(out.asharp));
  if (out.residual > kGInverseTol * scale_of(a) * xs * xs) {
    std::ostringstream os;
    os << "group_inverse: axiom residual " << out.residual;
    throw NumericalError(os.str());
  }
  return out;
}

DrazinLimit drazin_limit(const Matrix& a, const std::vector<double>& z_schedule) {
  require_square(a, "drazin_limit");
  if (z_schedule.size() < 2) throw ParameterError("drazin_limit: need at least two z values");
  const Index n = a.rows();
  DrazinLimit out;
  out.z = z_schedule;
  const Matrix a2 = a * a;
  std::vector<Matrix> xs;
  for (double z : z_schedule) {
    if (!(z > 0.0)) throw ParameterError("drazin_limit: z must be positive");
    const Matrix x = (a2 + z * Matrix::Identity(n, n)).partialPivLu().solve(a);
    if (!all_finite(x)) throw NumericalError("drazin_limit: non-finite resolvent");
    out.residuals.push_back(max_abs(a * x * a - a));
    xs.push_back(x);
  }
  for (std::size_t i = 1; i < out.residuals.size(); ++i) {
    // allow roundoff plateau near machine precision
    if (out.residuals[i] > out.residuals[i - 1] && out.residuals[i] > 1e-11 * scale_of(a)) {
      std::ostringstream os;
      os << "drazin_limit: residuals not decreasing (" << out.residuals[i - 1] << " -> "
         << out.residuals[i] << ")";
      throw NumericalError(os.str());
    }
  }
  // Lagrange weights at z = 0
  out.extrapolate = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) w *= z_schedule[j] / (z_schedule[j] - z_schedule[i]);
    out.extrapolate += w * xs[i];
  }
  return out;
}

Matrix ergodic_projector(const GroupInverse& gi) {
  const Index n = gi.a.rows();
  return Matrix::Identity(n, n) - gi.asharp * gi.a;
}

Matrix cesaro_mean(const Matrix& phi, long n) {
  require_square(phi, "cesaro_mean");
  if (n <= 0) throw ParameterError("cesaro_mean: n must be positive");
  const Index d = phi.rows();
  // s = sum_{m<a} phi^m, p = phi^a, built from the top bit of n down
  Matrix s = Matrix::Zero(d, d);
  Matrix p = Matrix::Identity(d, d);
  int top = 0;
  while ((n >> (top + 1)) > 0) ++top;
  for (int bit = top; bit >= 0; --bit) {
    s = s + p * s;
    p = p * p;
    if ((n >> bit) & 1L) {
      s = s + p;
      p = p * phi;
    }
  }
  return s / static_cast<double>(n);
}

std::string to_string(GInverseKind kind) {
  switch (kind) {
    case GInverseKind::HunterFamily: return "hunter-family";
    case GInverseKind::Group: return "group";
    case GInverseKind::Fundamental: return "fundamental";
    case GInverseKind::External: return "external";
  }
  return "external";
}

double ginverse_residual(const Matrix& a, const Matrix& g) { return max_abs(a * g * a - a); }

bool is_ginverse(const Matrix& a, const Matrix& g, double tol) {
  if (a.rows() != g.cols() || a.cols() != g.rows()) return false;
  return ginverse_residual(a, g) <= tol * scale_of(a);
}

GInverse make_ginverse(Matrix a, Matrix g, GInverseKind kind) {
  require_square(a, "make_ginverse");
  if (g.rows() != a.rows() || g.cols() != a.cols())
    throw DimensionError("make_ginverse: G and A shapes differ");
  GInverse out;
  out.residual = ginverse_residual(a, g);
  if (out.residual > kGInverseTol * scale_of(a))
    throw NumericalError("ginverse: AGA - A residual " + std::to_string(out.residual));
  out.a = std::move(a);
  out.g = std::move(g);
  out.kind = kind;
  return out;
}

HunterParams default_hunter_params(const Qmc& q) {
  const Index n = q.order();
  HunterParams p;
  p.t = Vector::Zero(n);
  p.t(0) = 1.0;
  p.u = trace_functional(q.n_sites(), q.internal_dim());
  p.f = Vector::Zero(n);
  p.g = Vector::Zero(n);
  p.g(0) = 1.0;
  return p;
}

GInverse hunter_ginverse(const Qmc& q, const HunterParams& params) {
  const Index n = q.order();
  for (const Vector* v : {&params.t, &params.u, &params.f, &params.g})
    if (v->size() != n)
      throw DimensionError("hunter_ginverse: parameter vectors must have length " +
                           std::to_string(n));
  const FixedMap fm = fixed_map(q);  // throws for non-unique stationary density
  const Vector& pi = fm.pi.data();
  const Vector e = trace_functional(q.n_sites(), q.internal_dim());
  const Complex et = e.dot(params.t);
  const Complex up = params.u.dot(pi);
  if (std::abs(et) < 1e-12) throw ParameterError("hunter_ginverse: <e_I|t> vanishes");
  if (std::abs(up) < 1e-12) throw ParameterError("hunter_ginverse: <u|pi> vanishes");

  const Matrix a = Matrix::Identity(n, n) - q.rep();
  const Matrix inner = a + params.t * params.u.adjoint();
  const Inverse inv = invert(inner, "hunter_ginverse");
  Matrix g = inv.inv + pi * params.f.adjoint() + params.g * e.adjoint();
  GInverse out = make_ginverse(a, std::move(g), GInverseKind::HunterFamily);
  out.params = params;
  return out;
}

}  // namespace qhit
