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


#include "qhit/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <ostream>

#include "CLI11.hpp"
#include "qhit/ksmh.hpp"
#include "qhit/qmc.hpp"

namespace qhit::cli {

namespace {

const std::vector<std::string> kMethods = {"series", "analytic", "ksmh-g", "ksmh-group"};

ojson echo(const ChannelSpec& spec, const Options& opts, const char* command) {
  ojson in;
  in["command"] = command;
  in["file"] = std::filesystem::path(opts.file).filename().string();
  in["dim"] = spec.dim;
  in["kind"] = spec.kind;
  if (spec.kraus) in["kraus_count"] = spec.kraus->kraus().size();
  if (spec.mix) in["mix_p"] = number(spec.mix->p);
  if (spec.subspace) in["subspace_dim"] = spec.subspace->dim();
  in["initial_state"] = static_cast<bool>(spec.initial_state);
  in["tol"] = number(opts.tol);
  return in;
}

ojson diagnostics_json(const ChannelDiagnostics& d) {
  ojson j;
  j["trace_preserving"] = d.is_trace_preserving;
  j["tp_deviation"] = number(d.tp_deviation);
  j["unital"] = d.is_unital;
  j["unital_deviation"] = number(d.unital_deviation);
  j["completely_positive"] = d.is_completely_positive;
  j["fixed_space_dim"] = d.fixed_space_dim;
  j["irreducible"] = d.is_irreducible;
  j["jordan_trivial_at_1"] = d.jordan_trivial_at_1;
  j["peripheral_eigenvalues"] = complex_list(d.peripheral_eigenvalues);
  j["spectral_radius"] = number(d.spectral_radius);
  j["min_fixed_eigenvalue"] = number(d.min_fixed_eigenvalue);
  j["warnings"] = d.warnings;
  return j;
}

ojson assumption_json(const AssumptionOne& a) {
  ojson j;
  j["holds"] = a.holds;
  j["offending"] = complex_list(a.offending);
  return j;
}

ojson error_json(const char* kind, const std::string& message) {
  ojson j;
  j["kind"] = kind;
  j["message"] = message;
  return j;
}

// validation shared by the commands that need a channel
bool channel_ok(const ChannelSpec& spec, const Options& opts, ojson& report) {
  const ChannelDiagnostics d = diagnose(spec.s, opts.tol);
  report["diagnostics"] = diagnostics_json(d);
  return d.is_trace_preserving && d.is_completely_positive;
}

HunterParams hunter_for(const ChannelSpec& spec, const Qmc& q) {
  return complete_hunter(spec.hunter, default_hunter_params(q));
}

ojson artifacts_json(const TauReport& r) {
  ojson j;
  for (const auto& [name, m] : r.artifacts) j[name] = matrix_json(m);
  return j;
}

}  // namespace

CommandResult cmd_validate(const ChannelSpec& spec, const Options& opts) {
  CommandResult res;
  ojson& rep = res.report;
  rep["inputs"] = echo(spec, opts, "validate");
  bool ok = channel_ok(spec, opts, rep);
  if (spec.kraus) rep["diagnostics"]["kraus_tp_deviation"] = number(spec.kraus->tp_deviation());
  if (spec.subspace) {
    if (spec.subspace->ambient_dim() != spec.dim) {
      rep["subspace"] = error_json("dimension", "subspace ambient dimension differs from dim");
      ok = false;
    } else {
      rep["assumption_one"] = assumption_json(assumption_one(spec.s, *spec.subspace));
    }
  }
  if (spec.initial_state) {
    ojson st;
    st["density"] = is_density(*spec.initial_state);
    if (spec.subspace) st["in_v_perp"] = spec.subspace->orthogonal_supports(*spec.initial_state);
    ok = ok && st["density"].get<bool>();
    rep["initial_state"] = st;
  }
  rep["valid"] = ok;
  res.code = ok ? kExitOk : kExitInvalid;
  return res;
}

CommandResult cmd_hitting(const ChannelSpec& spec, const Options& opts) {
  CommandResult res;
  ojson& rep = res.report;
  rep["inputs"] = echo(spec, opts, "hitting");
  if (!spec.subspace || !spec.initial_state) {
    rep["error"] = error_json("validation", "hitting needs 'subspace' and 'initial_state'");
    res.code = kExitInvalid;
    return res;
  }
  if (!channel_ok(spec, opts, rep) || !is_density(*spec.initial_state)) {
    rep["error"] = error_json("validation", "channel is not CPTP or initial state is not a density");
    res.code = kExitInvalid;
    return res;
  }
  const GoalSubspace& v = *spec.subspace;
  const Matrix& rho = *spec.initial_state;
  rep["assumption_one"] = assumption_json(assumption_one(spec.s, v));

  std::vector<std::string> methods = opts.method == "all" ? kMethods : std::vector<std::string>{opts.method};
  TauOptions topt;
  topt.keep_artifacts = opts.dump;
  try {
    topt.hunter = hunter_for(spec, induce(spec.s, v));
  } catch (const Error&) {
    // leave the defaults to tau_channel
  }

  ojson results = ojson::array();
  std::vector<std::pair<std::string, double>> taus;
  bool numerical = false;
  for (const std::string& name : methods) {
    ojson r;
    r["method"] = name;
    const auto m = method_from_string(name);
    try {
      if (!m) throw ParameterError("unknown method '" + name + "'");
      const TauReport tr = tau_channel(spec.s, v, rho, *m, topt);
      r["status"] = "ok";
      r["tau"] = number(tr.tau);
      r["verified"] = tr.verified;
      r["notes"] = tr.notes;
      if (tr.series) {
        ojson s;
        s["cumulative_probability"] = number(tr.series->cumulative_prob);
        s["partial_tau"] = number(tr.series->partial_tau);
        s["steps"] = tr.series->truncated_at;
        s["converged"] = tr.series->converged;
        s["diverges"] = tr.series->diverges;
        r["series"] = s;
      }
      if (opts.dump && !tr.artifacts.empty()) r["intermediates"] = artifacts_json(tr);
      taus.emplace_back(name, tr.tau);
    } catch (const SpectralObstruction& e) {
      r["status"] = "precondition-failed";
      r["reason"] = "assumption-i";
      r["message"] = e.what();
      r["offending"] = complex_list(e.offending());
    } catch (const ReducibleError& e) {
      r["status"] = "precondition-failed";
      r["reason"] = "reducible";
      r["message"] = e.what();
    } catch (const NoGroupInverse& e) {
      r["status"] = "precondition-failed";
      r["reason"] = "no-group-inverse";
      r["message"] = e.what();
    } catch (const NumericalError& e) {
      r["status"] = "numerical-failure";
      r["message"] = e.what();
      numerical = true;
    } catch (const Error& e) {
      r["status"] = "precondition-failed";
      r["reason"] = "invalid-input";
      r["message"] = e.what();
    }
    results.push_back(std::move(r));
  }
  rep["methods"] = results;

  if (taus.size() > 1) {
    ojson deltas = ojson::array();
    double worst = 0.0;
    for (std::size_t a = 0; a < taus.size(); ++a)
      for (std::size_t b = a + 1; b < taus.size(); ++b) {
        const double d = std::isfinite(taus[a].second) && std::isfinite(taus[b].second)
                             ? std::abs(taus[a].second - taus[b].second)
                             : (taus[a].second == taus[b].second ? 0.0 : std::numeric_limits<double>::infinity());
        worst = std::max(worst, d);
        ojson e;
        e["a"] = taus[a].first;
        e["b"] = taus[b].first;
        e["delta"] = number(d);
        deltas.push_back(e);
      }
    rep["agreement"] = {{"max_delta", number(worst)}, {"pairs", deltas}};
  }
  if (taus.empty()) res.code = numerical ? kExitNumerical : kExitNoMethod;
  return res;
}

CommandResult cmd_ginverse(const ChannelSpec& spec, const Options& opts) {
  CommandResult res;
  ojson& rep = res.report;
  rep["inputs"] = echo(spec, opts, "ginverse");
  rep["inputs"]["kind_requested"] = opts.kind;
  try {
    Matrix a;
    std::optional<Qmc> q;
    if (spec.matrix) {
      a = *spec.matrix;
      rep["operand"] = "matrix";
    } else {
      if (!channel_ok(spec, opts, rep)) {
        rep["error"] = error_json("validation", "channel is not CPTP");
        res.code = kExitInvalid;
        return res;
      }
      if (spec.subspace) {
        q = induce(spec.s, *spec.subspace);
        rep["operand"] = "I - induced qmc";
      } else {
        q = Qmc(1, spec.dim, spec.s.mat());
        rep["operand"] = "I - channel";
      }
      a = Matrix::Identity(q->order(), q->order()) - q->rep();
    }
    if (opts.dump) rep["A"] = matrix_json(a);

    if (opts.kind == "group") {
      const GroupInverse gi = group_inverse(a);
      rep["index"] = gi.index;
      rep["A_sharp"] = matrix_json(gi.asharp);
      rep["axiom_residual"] = number(gi.residual);
      rep["split_condition"] = number(gi.split_condition);
      const DrazinLimit dl = drazin_limit(a);
      rep["z_limit_gap"] = number(max_abs(dl.extrapolate - gi.asharp));
      rep["warnings"] = gi.warnings;
      if (opts.dump) rep["ergodic_projector"] = matrix_json(gi.ergodic_projector);
    } else if (opts.kind == "hunter") {
      if (!q) {
        rep["error"] = error_json("validation", "the Hunter family needs a channel, not a bare matrix");
        res.code = kExitInvalid;
        return res;
      }
      const HunterParams p = hunter_for(spec, *q);
      const GInverse g = hunter_ginverse(*q, p);
      rep["params"] = {{"t", vector_json(p.t)}, {"u", vector_json(p.u)}, {"f", vector_json(p.f)},
                       {"g", vector_json(p.g)}};
      rep["G"] = matrix_json(g.g);
      rep["residual"] = number(g.residual);
    } else {
      rep["error"] = error_json("validation", "unknown kind '" + opts.kind + "'");
      res.code = kExitInvalid;
    }
  } catch (const NumericalError& e) {
    rep["error"] = error_json("numerical", e.what());
    res.code = kExitNumerical;
  } catch (const DimensionError& e) {
    rep["error"] = error_json("validation", e.what());
    res.code = kExitInvalid;
  } catch (const Error& e) {
    rep["error"] = error_json("precondition", e.what());
    res.code = kExitNoMethod;
  }
  return res;
}

CommandResult cmd_sweep(const ChannelSpec& spec, const Options& opts) {
  CommandResult res;
  ojson& rep = res.report;
  rep["inputs"] = echo(spec, opts, "sweep");
  rep["inputs"]["param"] = opts.param;
  ojson vals = ojson::array();
  for (double x : opts.values) vals.push_back(number(x));
  rep["inputs"]["values"] = vals;
  auto fail = [&](const char* kind, const std::string& msg, int code) {
    rep["error"] = error_json(kind, msg);
    res.code = code;
    return res;
  };
  if (!spec.mix) return fail("validation", "sweep needs a randomization spec", kExitInvalid);
  if (opts.param != "p") return fail("validation", "only the mixing weight 'p' can be swept", kExitInvalid);
  if (opts.values.empty()) return fail("validation", "--values is empty", kExitInvalid);
  if (!spec.subspace || !spec.initial_state)
    return fail("validation", "sweep needs 'subspace' and 'initial_state'", kExitInvalid);
  if (!channel_ok(spec, opts, rep)) return fail("validation", "channel is not CPTP", kExitInvalid);
  try {
    const HunterParams hp = hunter_for(spec, induce(spec.s, *spec.subspace));
    const KernelLimitStudy st = kernel_limit_study(spec.mix->left->s, spec.mix->right->s, *spec.subspace,
                                                   *spec.initial_state, opts.values, hp);
    ojson rows = ojson::array();
    for (const LimitRow& r : st.rows) {
      ojson row;
      row["p"] = number(r.p);
      row["tau"] = number(r.tau);
      row["tau_group"] = number(r.tau_group);
      row["g_norm"] = number(r.g_norm);
      row["kernel_gap"] = number(r.kernel_gap);
      rows.push_back(row);
    }
    rep["rows"] = rows;
    rep["extrapolated"] = {{"p", 0}, {"tau", number(st.tau0_extrapolated)}};
    rep["direct"] = {{"p", 0}, {"tau", number(st.tau0_direct)}, {"assumption_one", st.assumption_one_at_0}};
    rep["g_diverges"] = st.g_diverges;
    rep["g_growth"] = number(st.g_growth);
    rep["h0_gap"] = number(st.h_gap);
    rep["notes"] = st.notes;
    if (opts.dump) {
      if (st.h0_extrapolated.size()) rep["H0_extrapolated"] = matrix_json(st.h0_extrapolated);
      if (st.h0_direct.size()) rep["H0_direct"] = matrix_json(st.h0_direct);
      if (st.a0_sharp.size()) rep["A0_sharp"] = matrix_json(st.a0_sharp);
    }
  } catch (const NumericalError& e) {
    return fail("numerical", e.what(), kExitNumerical);
  } catch (const DimensionError& e) {
    return fail("validation", e.what(), kExitInvalid);
  } catch (const ValidationError& e) {
    return fail("validation", e.what(), kExitInvalid);
  } catch (const Error& e) {
    return fail("precondition", e.what(), kExitNoMethod);
  }
  return res;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qhit: mean hitting times of quantum channels"};
  app.require_subcommand(1);
  Options opts;
  auto common = [&](CLI::App* sub) {
    sub->add_option("spec", opts.file, "channel spec file (JSON)")->required();
    sub->add_flag("--json", opts.json, "machine-readable report");
    sub->add_option("--tol", opts.tol, "validation tolerance")->check(CLI::PositiveNumber);
  };
  CLI::App* validate = app.add_subcommand("validate", "channel diagnostics");
  common(validate);
  CLI::App* hitting = app.add_subcommand("hitting", "mean hitting time of the goal subspace");
  common(hitting);
  hitting->add_option("--method", opts.method)
      ->check(CLI::IsMember({"series", "analytic", "ksmh-g", "ksmh-group", "all"}));
  hitting->add_flag("--dump-intermediates", opts.dump);
  CLI::App* ginv = app.add_subcommand("ginverse", "group inverse or Hunter g-inverse of I - Phi");
  common(ginv);
  ginv->add_option("--kind", opts.kind)->check(CLI::IsMember({"group", "hunter"}));
  ginv->add_flag("--dump-intermediates", opts.dump);
  CLI::App* sweep = app.add_subcommand("sweep", "randomization sweep and p -> 0 limit");
  common(sweep);
  sweep->add_option("--param", opts.param);
  sweep->add_option("--values", opts.values)->delimiter(',')->required();
  sweep->add_flag("--dump-intermediates", opts.dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e, out, err);
    return c == 0 ? kExitOk : kExitInvalid;
  }

  auto emit = [&](const ojson& j) { out << (opts.json ? render_json(j) : render_text(j)); };
  ChannelSpec spec;
  try {
    spec = load_spec(opts.file);
  } catch (const SpecError& e) {
    ojson j;
    j["error"] = {{"kind", "parse"}, {"path", e.path()}, {"message", e.what()}};
    if (opts.json) emit(j);
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    ojson j;
    j["error"] = {{"kind", "parse"}, {"message", e.what()}};
    if (opts.json) emit(j);
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  CommandResult res;
  try {
    if (*validate)
      res = cmd_validate(spec, opts);
    else if (*hitting)
      res = cmd_hitting(spec, opts);
    else if (*ginv)
      res = cmd_ginverse(spec, opts);
    else
      res = cmd_sweep(spec, opts);
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  emit(res.report);
  if (res.report.contains("error")) err << "error: " << res.report["error"]["message"].get<std::string>() << "\n";
  return res.code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("qhit");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qhit::cli
