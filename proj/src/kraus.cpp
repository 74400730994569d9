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

#include "geomq/kraus.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace geomq {

KrausFamily::KrausFamily(std::vector<CMatrix> ops) : ops_(std::move(ops)) {
  detail::require(!ops_.empty(), ErrorCode::invalid_argument, "KrausFamily: family must be nonempty");
  for (const auto& m : ops_) {
    detail::require_square_finite(m, "KrausFamily: operators must be square and finite");
    detail::require_same_dim(m.rows(), ops_.front().rows(), "KrausFamily: operators must share a dimension");
  }
}

KrausFamily amplitude_damping(double gamma) {
  detail::require(gamma >= 0.0 && gamma <= 1.0, ErrorCode::invalid_argument, "amplitude_damping: need 0 <= γ <= 1");
  CMatrix m1 = CMatrix::Zero(2, 2);
  m1(0, 0) = 1.0;
  m1(1, 1) = std::sqrt(1.0 - gamma);
  CMatrix m2 = CMatrix::Zero(2, 2);
  m2(0, 1) = std::sqrt(gamma);
  return KrausFamily({m1, m2});
}

CMatrix apply(const KrausFamily& k, const CMatrix& rho) {
  detail::require_square_finite(rho, "apply: bad state");
  detail::require_same_dim(rho.rows(), k.dim(), "apply: dimension mismatch");
  CMatrix out = CMatrix::Zero(k.dim(), k.dim());
  for (const auto& m : k.ops()) out += m * rho * m.adjoint();
  return out;
}

PositiveOperator apply(const KrausFamily& k, const PositiveOperator& omega) {
  return PositiveOperator(HermitianOperator::symmetrized(apply(k, omega.matrix())));
}

double normalization_defect(const KrausFamily& k) {
  CMatrix s = CMatrix::Zero(k.dim(), k.dim());
  for (const auto& m : k.ops()) s += m.adjoint() * m;
  return max_abs(s - CMatrix::Identity(k.dim(), k.dim()));
}

bool is_normalized(const KrausFamily& k) { return normalization_defect(k) <= tol::identity_check; }

KrausFamily compose(const KrausFamily& k, const KrausFamily& k_prime) {
  detail::require_same_dim(k.dim(), k_prime.dim(), "compose: dimension mismatch");
  std::vector<CMatrix> ops;
  ops.reserve(k.size() * k_prime.size());
  for (const auto& m : k.ops())
    for (const auto& mp : k_prime.ops()) ops.push_back(m * mp);
  return KrausFamily(std::move(ops));
}

CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());  // Eigen storage is column-major
}

CMatrix unvec(const CVector& v, Index n) {
  detail::require(n >= 1 && v.size() == n * n, ErrorCode::dimension_mismatch, "unvec: length must be n²");
  return Eigen::Map<const CMatrix>(v.data(), n, n);
}

ChoiMatrix::ChoiMatrix(CMatrix c, Index n) : c_(std::move(c)), n_(n) {
  detail::require(n >= 1 && c_.rows() == n * n && c_.cols() == n * n, ErrorCode::dimension_mismatch,
                  "ChoiMatrix: matrix must be n²×n²");
  detail::require(hermiticity_defect(c_) <= tol::hermitian * std::max(1.0, max_abs(c_)), ErrorCode::not_hermitian,
                  "ChoiMatrix: matrix must be Hermitian");
  c_ = 0.5 * (c_ + c_.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(c_, Eigen::EigenvaluesOnly);
  eigenvalues_ = es.eigenvalues();
  rank_ = positive_rank(eigenvalues_, c_.trace().real());
}

CMatrix ChoiMatrix::apply(const CMatrix& rho) const {
  detail::require_square_finite(rho, "ChoiMatrix::apply: bad state");
  detail::require_same_dim(rho.rows(), n_, "ChoiMatrix::apply: dimension mismatch");
  CMatrix out = CMatrix::Zero(n_, n_);
  for (Index i = 0; i < n_; ++i)
    for (Index k = 0; k < n_; ++k)
      for (Index j = 0; j < n_; ++j)
        for (Index l = 0; l < n_; ++l) out(i, k) += c_(i + n_ * j, k + n_ * l) * rho(j, l);
  return out;
}

ChoiMatrix choi(const KrausFamily& k) {
  const Index n = k.dim();
  CMatrix c = CMatrix::Zero(n * n, n * n);
  for (const auto& m : k.ops()) {
    const CVector v = vec(m);
    c += v * v.adjoint();
  }
  return ChoiMatrix(std::move(c), n);
}

Index kraus_rank(const KrausFamily& k) { return choi(k).rank(); }

std::optional<CMatrix> invert(const KrausFamily& k) {
  const ChoiMatrix c = choi(k);
  if (c.rank() != 1) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(c.matrix());
  const Index top = es.eigenvalues().size() - 1;
  CMatrix m = std::sqrt(es.eigenvalues()(top)) * unvec(es.eigenvectors().col(top), k.dim());

  // Every M_j is a multiple of M; fix the free phase against the first nonzero one.
  for (const auto& mj : k.ops()) {
    const Complex overlap = (mj.adjoint() * m).trace();
    if (std::abs(overlap) > 1e-12 * std::max(1.0, m.squaredNorm())) {
      m *= std::conj(overlap) / std::abs(overlap);
      break;
    }
  }
  Eigen::FullPivLU<CMatrix> lu(m);
  if (!lu.isInvertible()) return std::nullopt;
  return m;
}

}  // namespace geomq
