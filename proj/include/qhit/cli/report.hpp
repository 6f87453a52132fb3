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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qhit/matrep.hpp"

namespace qhit::cli {

using ojson = nlohmann::ordered_json;

inline constexpr int kSignificantDigits = 12;
inline constexpr double kChop = 1e-12;

// 12 significant digits, |x| < 1e-12 -> 0
double round_sig(double x);
// numbers, "inf", "-inf" or "nan"
ojson number(double x);
ojson complex_json(Complex z);
ojson vector_json(const Vector& v);
ojson matrix_json(const Matrix& m);
ojson complex_list(const std::vector<Complex>& zs);

std::string render_json(const ojson& j);
std::string render_text(const ojson& j);

}  // namespace qhit::cli
