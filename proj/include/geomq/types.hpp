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

#ifndef GEOMQ_TYPES_HPP
#define GEOMQ_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace geomq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Tolerances shared across modules. Values are absolute unless noted.
namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double identity_check = 1e-10;
inline constexpr double positivity = 1e-10;
/// Rank threshold, relative to the trace of the operator.
inline constexpr double rank_relative = 1e-8;
inline constexpr double trace = 1e-10;
}  // namespace tol

enum class ErrorCode {
  dimension_mismatch = 1,
  not_hermitian,
  not_positive,
  singular,
  zero_vector,
  invalid_spec,
  non_finite,
  integration_failure,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

inline void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) throw Error(code, what);
}

inline void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) throw Error(ErrorCode::dimension_mismatch, what);
}

inline void require_square_finite(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) throw Error(ErrorCode::dimension_mismatch, what);
  if (!m.allFinite()) throw Error(ErrorCode::non_finite, what);
}

}  // namespace detail

}  // namespace geomq

#endif  // GEOMQ_TYPES_HPP
