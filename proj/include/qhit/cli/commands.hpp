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

#include <iosfwd>
#include <string>
#include <vector>

#include "qhit/cli/report.hpp"
#include "qhit/cli/spec_io.hpp"

namespace qhit::cli {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitNoMethod = 3, kExitNumerical = 4 };

struct Options {
  std::string file;
  bool json = false;
  bool dump = false;
  double tol = 1e-9;
  std::string method = "all";
  std::string kind = "group";
  std::string param = "p";
  std::vector<double> values;
};

struct CommandResult {
  int code = kExitOk;
  ojson report;
};

CommandResult cmd_validate(const ChannelSpec& spec, const Options& opts);
CommandResult cmd_hitting(const ChannelSpec& spec, const Options& opts);
CommandResult cmd_ginverse(const ChannelSpec& spec, const Options& opts);
CommandResult cmd_sweep(const ChannelSpec& spec, const Options& opts);

// full front end; returns the exit code
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhit::cli
