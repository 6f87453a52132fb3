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


#include "qhit/cli/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qhit::cli {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& path, const char* key) { return path + "." + key; }

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw SpecError(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

double parse_real(const json& j, const std::string& path) {
  if (!j.is_number()) throw SpecError(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw SpecError(path, "non-finite number");
  return x;
}

Index parse_dim(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long>() < 1) throw SpecError(path, "dim must be a positive integer");
  return j.get<Index>();
}

}  // namespace

Complex parse_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {parse_real(j, path), 0.0};
  if (j.is_array() && j.size() == 2) return {parse_real(j[0], at(path, std::size_t{0})), parse_real(j[1], at(path, std::size_t{1}))};
  throw SpecError(path, "expected a number or an [re, im] pair");
}

Vector parse_vector(const json& j, const std::string& path, Index n) {
  if (!j.is_array()) throw SpecError(path, "expected an array");
  if (n >= 0 && static_cast<Index>(j.size()) != n)
    throw SpecError(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = parse_complex(j[i], at(path, i));
  return v;
}

Matrix parse_matrix(const json& j, const std::string& path, Index rows, Index cols) {
  if (!j.is_array() || j.empty()) throw SpecError(path, "expected a non-empty array of rows");
  if (rows >= 0 && static_cast<Index>(j.size()) != rows)
    throw SpecError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  if (!j[0].is_array()) throw SpecError(at(path, std::size_t{0}), "expected a row array");
  const Index c = cols >= 0 ? cols : static_cast<Index>(j[0].size());
  Matrix m(static_cast<Index>(j.size()), c);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Vector row = parse_vector(j[i], at(path, i), c);
    m.row(i) = row.transpose();
  }
  return m;
}

ChannelSpec parse_spec(const json& j, const std::string& path, Index inherited_dim) {
  if (!j.is_object()) throw SpecError(path, "expected an object");
  ChannelSpec spec;
  if (j.contains("dim"))
    spec.dim = parse_dim(j.at("dim"), at(path, "dim"));
  else if (inherited_dim > 0)
    spec.dim = inherited_dim;
  else
    throw SpecError(path, "missing field 'dim'");
  const Index n = spec.dim;

  const json& kind = require(j, "kind", path);
  if (!kind.is_string()) throw SpecError(at(path, "kind"), "expected a string");
  spec.kind = kind.get<std::string>();

  if (spec.kind == "kraus") {
    const json& ks = require(j, "kraus", path);
    const std::string kp = at(path, "kraus");
    if (!ks.is_array() || ks.empty()) throw SpecError(kp, "expected a non-empty list of matrices");
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < ks.size(); ++i) ops.push_back(parse_matrix(ks[i], at(kp, i), n, n));
    spec.kraus = KrausChannel::unchecked(std::move(ops));
    spec.s = represent(*spec.kraus);
  } else if (spec.kind == "unitary") {
    const Matrix u = parse_matrix(require(j, "unitary", path), at(path, "unitary"), n, n);
    spec.kraus = KrausChannel::unchecked({u});
    spec.s = represent(*spec.kraus);
  } else if (spec.kind == "superop") {
    const Matrix m = parse_matrix(require(j, "superop", path), at(path, "superop"), n * n, n * n);
    spec.s = SuperOp(n, m);
  } else if (spec.kind == "randomization") {
    const json& mj = require(j, "mix", path);
    const std::string mp = at(path, "mix");
    if (!mj.is_object()) throw SpecError(mp, "expected an object");
    Mix mix;
    mix.p = parse_real(require(mj, "p", mp), at(mp, "p"));
    if (mix.p < 0.0 || mix.p > 1.0) throw SpecError(at(mp, "p"), "p must lie in [0, 1]");
    mix.left = std::make_shared<ChannelSpec>(parse_spec(require(mj, "left", mp), at(mp, "left"), n));
    mix.right = std::make_shared<ChannelSpec>(parse_spec(require(mj, "right", mp), at(mp, "right"), n));
    if (mix.left->dim != n || mix.right->dim != n) throw SpecError(mp, "mixed channels must share dim");
    spec.s = randomize(mix.left->s, mix.right->s, mix.p);
    spec.mix = std::move(mix);
  } else {
    throw SpecError(at(path, "kind"), "unknown kind '" + spec.kind +
                                          "' (expected kraus, unitary, superop or randomization)");
  }

  if (j.contains("subspace")) {
    const json& sj = j.at("subspace");
    const std::string sp = at(path, "subspace");
    if (!sj.is_array() || sj.empty()) throw SpecError(sp, "expected a non-empty list of vectors");
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < sj.size(); ++i) vs.push_back(parse_vector(sj[i], at(sp, i), n));
    try {
      spec.subspace = GoalSubspace::spanned_by(vs);
    } catch (const Error& e) {
      throw SpecError(sp, e.what());
    }
  }

  if (j.contains("initial_state")) {
    const json& rj = j.at("initial_state");
    const std::string rp = at(path, "initial_state");
    Matrix rho;
    if (rj.is_object() && rj.contains("vector")) {
      rho = pure_state(parse_vector(rj.at("vector"), at(rp, "vector"), n));
    } else if (rj.is_object() && rj.contains("matrix")) {
      rho = parse_matrix(rj.at("matrix"), at(rp, "matrix"), n, n);
    } else if (rj.is_array() && !rj.empty() && rj[0].is_number()) {
      rho = pure_state(parse_vector(rj, rp, n));
    } else {
      rho = parse_matrix(rj, rp, n, n);
    }
    if (rj.is_array() && !rj.empty() && rj[0].is_number()) {
      const double nrm = parse_vector(rj, rp, n).norm();
      if (std::abs(nrm - 1.0) > 1e-9) throw SpecError(rp, "state vector is not normalized");
    }
    spec.initial_state = rho;
  }

  if (j.contains("hunter")) {
    const json& hj = j.at("hunter");
    const std::string hp = at(path, "hunter");
    if (!hj.is_object()) throw SpecError(hp, "expected an object with t, u, f, g");
    HunterParams hpar;
    for (auto [key, dst] : {std::pair{"t", &hpar.t}, std::pair{"u", &hpar.u}, std::pair{"f", &hpar.f},
                            std::pair{"g", &hpar.g}})
      if (hj.contains(key)) *dst = parse_vector(hj.at(key), at(hp, key));
    spec.hunter = hpar;
  }

  if (j.contains("matrix")) spec.matrix = parse_matrix(j.at("matrix"), at(path, "matrix"));
  return spec;
}

ChannelSpec load_spec(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw SpecError("$", "cannot read '" + file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << "JSON parse error at byte " << e.byte;
    throw SpecError("$", os.str());
  }
  return parse_spec(j);
}

HunterParams complete_hunter(const std::optional<HunterParams>& partial, const HunterParams& defaults) {
  HunterParams out = defaults;
  if (!partial) return out;
  if (partial->t.size()) out.t = partial->t;
  if (partial->u.size()) out.u = partial->u;
  if (partial->f.size()) out.f = partial->f;
  if (partial->g.size()) out.g = partial->g;
  return out;
}

}  // namespace qhit::cli
