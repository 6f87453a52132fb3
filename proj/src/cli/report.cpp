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


#include "qhit/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qhit::cli {

namespace {

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, round_sig(x));
  return buf;
}

std::string scalar_text(const ojson& j) {
  if (j.is_number()) return fmt(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_pair(const ojson& j) { return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(); }

std::string pair_text(const ojson& j) {
  const double re = j[0].get<double>(), im = j[1].get<double>();
  if (im == 0.0) return fmt(re);
  std::ostringstream os;
  os << fmt(re) << (im < 0 ? "-" : "+") << fmt(std::abs(im)) << "i";
  return os.str();
}

bool is_matrix(const ojson& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) return false;
  for (const auto& row : j)
    for (const auto& x : row)
      if (!is_pair(x)) return false;
  return true;
}

void text(const ojson& j, std::ostringstream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const ojson& v = it.value();
    os << pad << it.key() << ":";
    if (v.is_object()) {
      os << "\n";
      text(v, os, indent + 2);
    } else if (is_matrix(v)) {
      os << "\n";
      for (const auto& row : v) {
        os << pad << "  ";
        for (const auto& x : row) os << " " << pair_text(x);
        os << "\n";
      }
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      os << "\n";
      for (const auto& item : v) {
        os << pad << "  -\n";
        text(item, os, indent + 4);
      }
    } else if (v.is_array()) {
      for (const auto& x : v) os << " " << (is_pair(x) ? pair_text(x) : scalar_text(x));
      os << "\n";
    } else {
      os << " " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < kChop) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*e", kSignificantDigits - 1, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

ojson number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round_sig(x);
}

ojson complex_json(Complex z) { return ojson::array({number(z.real()), number(z.imag())}); }

ojson vector_json(const Vector& v) {
  ojson out = ojson::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

ojson matrix_json(const Matrix& m) {
  ojson out = ojson::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ojson complex_list(const std::vector<Complex>& zs) {
  ojson out = ojson::array();
  for (Complex z : zs) out.push_back(complex_json(z));
  return out;
}

std::string render_json(const ojson& j) { return j.dump(2) + "\n"; }

std::string render_text(const ojson& j) {
  std::ostringstream os;
  text(j, os, 0);
  return os.str();
}

}  // namespace qhit::cli
