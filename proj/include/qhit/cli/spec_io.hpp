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

#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qhit/channel.hpp"
#include "qhit/errors.hpp"
#include "qhit/ginverse.hpp"

namespace qhit::cli {

using json = nlohmann::json;

// parse failure with a JSON path such as $.kraus[1][0]
class SpecError : public ValidationError {
 public:
  SpecError(const std::string& path, const std::string& what)
      : ValidationError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ChannelSpec;

struct Mix {
  double p = 0.0;
  std::shared_ptr<ChannelSpec> left, right;
};

struct ChannelSpec {
  Index dim = 0;
  std::string kind;                  // kraus | unitary | superop | randomization
  std::optional<KrausChannel> kraus;  // unchecked; TP is reported, not enforced here
  SuperOp s;
  std::optional<Mix> mix;
  std::optional<GoalSubspace> subspace;
  std::optional<Matrix> initial_state;
  std::optional<HunterParams> hunter;  // missing entries are left empty
  std::optional<Matrix> matrix;        // raw matrix for the ginverse command
};

// number or [re, im]
Complex parse_complex(const json& j, const std::string& path);
Vector parse_vector(const json& j, const std::string& path, Index n = -1);
Matrix parse_matrix(const json& j, const std::string& path, Index rows = -1, Index cols = -1);

ChannelSpec parse_spec(const json& j, const std::string& path = "$", Index inherited_dim = 0);
ChannelSpec load_spec(const std::string& file);

// missing Hunter vectors fall back to the defaults for q
HunterParams complete_hunter(const std::optional<HunterParams>& partial, const HunterParams& defaults);

}  // namespace qhit::cli
