// Copyright 2026 The geomq Authors.
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

#ifndef GEOMQ_TESTS_SUPPORT_HPP
#define GEOMQ_TESTS_SUPPORT_HPP

#include <doctest.h>

#include "geomq/hermitian.hpp"
#include "geomq/kahler.hpp"
#include "geomq/random.hpp"

namespace geomq::test {

inline const Complex I{0.0, 1.0};

inline CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline RVector vec(std::initializer_list<double> xs) {
  RVector v(static_cast<Index>(xs.size()));
  Index k = 0;
  for (double x : xs) v(k++) = x;
  return v;
}

// Max-abs distance between two matrices or vectors of the same scalar type.
template <typename A, typename B>
double dist(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a.eval() - b.eval()).cwiseAbs().maxCoeff();
}

// Exception code check without doctest's string matching.
template <typename F>
ErrorCode error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected geomq::Error");
  return ErrorCode::invalid_argument;
}

}  // namespace geomq::test

#endif  // GEOMQ_TESTS_SUPPORT_HPP
