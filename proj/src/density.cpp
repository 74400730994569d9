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

#include "geomq/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace geomq {

namespace {

CMatrix checked_invertible(const CMatrix& g, Index n, const char* what) {
  detail::require_square_finite(g, what);
  detail::require_same_dim(g.rows(), n, what);
  Eigen::FullPivLU<CMatrix> lu(g);
  detail::require(lu.isInvertible(), ErrorCode::singular, what);
  return g;
}

}  // namespace

Index positive_rank(const RVector& eigenvalues, double trace) {
  const double threshold = tol::rank_relative * std::max(trace, std::numeric_limits<double>::min());
  return static_cast<Index>((eigenvalues.array() > threshold).count());
}

PositiveOperator::PositiveOperator(HermitianOperator omega) : omega_(std::move(omega)) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(omega_.matrix(), Eigen::EigenvaluesOnly);
  eigenvalues_ = es.eigenvalues();
  trace_ = omega_.matrix().trace().real();
  detail::require(eigenvalues_(0) >= -tol::positivity * std::max(1.0, std::abs(trace_)), ErrorCode::not_positive,
                  "PositiveOperator: negative eigenvalue");
  rank_ = positive_rank(eigenvalues_, trace_);
}

DensityMatrix::DensityMatrix(PositiveOperator rho) : rho_(std::move(rho)) {
  detail::require(std::abs(rho_.trace() - 1.0) <= tol::trace, ErrorCode::invalid_argument,
                  "DensityMatrix: trace must be 1");
}

DensityMatrix DensityMatrix::from_matrix(const CMatrix& m) {
  return DensityMatrix(PositiveOperator(HermitianOperator(m)));
}

DensityMatrix DensityMatrix::pure(const RealifiedVector& psi) {
  const double n2 = psi.squaredNorm();
  detail::require(n2 > 0.0, ErrorCode::zero_vector, "DensityMatrix::pure: zero vector");
  const CVector z = complexify(psi);
  return DensityMatrix(PositiveOperator(HermitianOperator::symmetrized(z * z.adjoint() / n2)));
}

DensityMatrix DensityMatrix::maximally_mixed(Index n) {
  detail::require(n >= 1, ErrorCode::invalid_argument, "maximally_mixed: n must be >= 1");
  return DensityMatrix(PositiveOperator(HermitianOperator::identity(n) * (1.0 / static_cast<double>(n))));
}

PositiveOperator factorize_positive(const CMatrix& r) {
  detail::require(r.rows() > 0 && r.cols() > 0, ErrorCode::dimension_mismatch, "factorize_positive: empty matrix");
  detail::require(r.allFinite(), ErrorCode::non_finite, "factorize_positive: non-finite matrix");
  return PositiveOperator(HermitianOperator::symmetrized(r * r.adjoint()));
}

PositiveOperator gl_action_cone(const CMatrix& g, const PositiveOperator& omega) {
  const CMatrix gg = checked_invertible(g, omega.dim(), "gl_action_cone: g must be invertible and match ω");
  return PositiveOperator(HermitianOperator::symmetrized(gg * omega.matrix() * gg.adjoint()));
}

DensityMatrix gl_action_states(const CMatrix& g, const DensityMatrix& rho) {
  const CMatrix gg = checked_invertible(g, rho.dim(), "gl_action_states: g must be invertible and match ρ");
  const CMatrix m = gg * rho.matrix() * gg.adjoint();
  const double tr = m.trace().real();
  return DensityMatrix(PositiveOperator(HermitianOperator::symmetrized(m / tr)));
}

Index stratum(const PositiveOperator& omega) { return omega.rank(); }
Index stratum(const DensityMatrix& rho) { return rho.rank(); }

std::map<Index, std::vector<std::size_t>> stratify(const std::vector<DensityMatrix>& states) {
  std::map<Index, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < states.size(); ++i) out[states[i].rank()].push_back(i);
  return out;
}

bool is_gl_member(const RMatrix& phi) {
  if (phi.rows() != phi.cols() || phi.rows() == 0 || phi.rows() % 2 != 0 || !phi.allFinite()) return false;
  const RMatrix j = KahlerTensors::standard(phi.rows() / 2).J;
  const double scale = std::max(1.0, phi.cwiseAbs().maxCoeff());
  if ((phi * j - j * phi).cwiseAbs().maxCoeff() > tol::identity_check * scale) return false;
  Eigen::FullPivLU<RMatrix> lu(phi);
  return lu.isInvertible();
}

}  // namespace geomq
