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

#include <gtest/gtest.h>

#include <sstream>

#include "qhit/matrep.hpp"

namespace qhit::testing {

inline ::testing::AssertionResult MatNear(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return ::testing::AssertionFailure() << "shape " << a.rows() << "x" << a.cols() << " vs " << b.rows()
                                         << "x" << b.cols();
  Index bi = 0, bj = 0;
  const double err = (a - b).cwiseAbs().maxCoeff(&bi, &bj);
  if (err <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max entry gap " << err << " at (" << bi << ", " << bj << "): " << a(bi, bj)
                                       << " vs " << b(bi, bj);
}

}  // namespace qhit::testing

#define EXPECT_MAT_NEAR(a, b, tol) EXPECT_TRUE(::qhit::testing::MatNear((a), (b), (tol)))
