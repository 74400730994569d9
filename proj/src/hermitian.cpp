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

#include "geomq/hermitian.hpp"

#include <cmath>

namespace geomq {

namespace {
const Complex kI{0.0, 1.0};
}

HermitianOperator::HermitianOperator(CMatrix m) : m_(std::move(m)) {
  detail::require_square_finite(m_, "HermitianOperator: matrix must be square, nonempty and finite");
  detail::require(hermiticity_defect(m_) <= tol::hermitian, ErrorCode::not_hermitian,
                  "HermitianOperator: matrix is not Hermitian");
}

HermitianOperator HermitianOperator::symmetrized(const CMatrix& m) {
  detail::require_square_finite(m, "HermitianOperator::symmetrized: bad matrix");
  return HermitianOperator(CMatrix(0.5 * (m + m.adjoint())), Unchecked{});
}

HermitianOperator HermitianOperator::identity(Index n) {
  return HermitianOperator(CMatrix::Identity(n, n), Unchecked{});
}

HermitianOperator HermitianOperator::zero(Index n) {
  return HermitianOperator(CMatrix::Zero(n, n), Unchecked{});
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  detail::require_same_dim(dim(), o.dim(), "HermitianOperator::operator+: dimension mismatch");
  return HermitianOperator(CMatrix(m_ + o.m_), Unchecked{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  detail::require_same_dim(dim(), o.dim(), "HermitianOperator::operator-: dimension mismatch");
  return HermitianOperator(CMatrix(m_ - o.m_), Unchecked{});
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(CMatrix(s * m_), Unchecked{});
}

DeformedMetric::DeformedMetric(HermitianOperator k) : k_(std::move(k)) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(k_.matrix(), Eigen::EigenvaluesOnly);
  detail::require(es.eigenvalues().minCoeff() > 0.0, ErrorCode::not_positive,
                  "DeformedMetric: K must be positive definite");
}

DeformedMetric DeformedMetric::diagonal_alpha(double alpha) {
  CMatrix k = CMatrix::Zero(2, 2);
  k(0, 0) = alpha;
  k(1, 1) = 2.0 - alpha;
  return DeformedMetric(HermitianOperator(k));
}

HermitianOperator pauli(int k) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (k) {
    case 0:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw Error(ErrorCode::invalid_argument, "pauli: index must be 0..3");
  }
  return HermitianOperator(m);
}

std::vector<HermitianOperator> gell_mann_basis(Index n) {
  detail::require(n >= 1, ErrorCode::invalid_argument, "gell_mann_basis: n must be >= 1");
  std::vector<HermitianOperator> basis;
  basis.reserve(static_cast<std::size_t>(n * n));
  basis.push_back(HermitianOperator::identity(n) * std::sqrt(2.0 / static_cast<double>(n)));
  // Ordering for n = 2 reproduces σ₁, σ₂, σ₃: symmetric, antisymmetric, diagonal.
  for (Index j = 0; j < n; ++j) {
    for (Index k = j + 1; k < n; ++k) {
      CMatrix s = CMatrix::Zero(n, n);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      basis.emplace_back(s);
      CMatrix a = CMatrix::Zero(n, n);
      a(j, k) = -kI;
      a(k, j) = kI;
      basis.emplace_back(a);
    }
  }
  for (Index l = 1; l < n; ++l) {
    CMatrix d = CMatrix::Zero(n, n);
    const double norm = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (Index j = 0; j < l; ++j) d(j, j) = norm;
    d(l, l) = -static_cast<double>(l) * norm;
    basis.emplace_back(d);
  }
  return basis;
}

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

HermitianOperator lie_bracket(const HermitianOperator& a, const HermitianOperator& b) {
  detail::require_same_dim(a.dim(), b.dim(), "lie_bracket: dimension mismatch");
  const CMatrix& am = a.matrix();
  const CMatrix& bm = b.matrix();
  return HermitianOperator::symmetrized(-kI * (am * bm - bm * am));
}

HermitianOperator jordan_bracket(const HermitianOperator& a, const HermitianOperator& b) {
  detail::require_same_dim(a.dim(), b.dim(), "jordan_bracket: dimension mismatch");
  const CMatrix& am = a.matrix();
  const CMatrix& bm = b.matrix();
  return HermitianOperator::symmetrized(am * bm + bm * am);
}

CMatrix star_decompose(const HermitianOperator& a, const HermitianOperator& b) {
  detail::require_same_dim(a.dim(), b.dim(), "star_decompose: dimension mismatch");
  return 0.5 * jordan_bracket(a, b).matrix() + (0.5 * kI) * lie_bracket(a, b).matrix();
}

LieJordanResidual lie_jordan_residual(const HermitianOperator& a, const HermitianOperator& b,
                                      const HermitianOperator& c, double hbar) {
  detail::require_same_dim(a.dim(), b.dim(), "check_lie_jordan_axioms: dimension mismatch");
  detail::require_same_dim(a.dim(), c.dim(), "check_lie_jordan_axioms: dimension mismatch");
  detail::require(hbar > 0.0, ErrorCode::invalid_argument, "check_lie_jordan_axioms: hbar must be > 0");

  LieJordanResidual r;
  const CMatrix derivation_lhs = lie_bracket(a, jordan_bracket(b, c)).matrix();
  const CMatrix derivation_rhs =
      jordan_bracket(lie_bracket(a, b), c).matrix() + jordan_bracket(b, lie_bracket(a, c)).matrix();
  r.derivation = max_abs(derivation_lhs - derivation_rhs);

  const CMatrix jordan_assoc =
      jordan_bracket(jordan_bracket(a, b), c).matrix() - jordan_bracket(a, jordan_bracket(b, c)).matrix();
  const CMatrix lie_assoc =
      lie_bracket(lie_bracket(a, b), c).matrix() - lie_bracket(a, lie_bracket(b, c)).matrix();
  r.associator = max_abs(jordan_assoc - hbar * hbar * lie_assoc);
  return r;
}

bool check_lie_jordan_axioms(const HermitianOperator& a, const HermitianOperator& b,
                             const HermitianOperator& c, double hbar) {
  const auto r = lie_jordan_residual(a, b, c, hbar);
  return r.derivation <= tol::identity_check && r.associator <= tol::identity_check;
}

Complex k_inner(const CVector& z, const CVector& w, const DeformedMetric& k) {
  detail::require_same_dim(z.size(), k.dim(), "k_inner: dimension mismatch");
  detail::require_same_dim(w.size(), k.dim(), "k_inner: dimension mismatch");
  return z.dot(k.k().matrix() * w);
}

bool is_k_unitary(const CMatrix& a, const DeformedMetric& k) {
  detail::require_square_finite(a, "is_k_unitary: bad matrix");
  detail::require_same_dim(a.rows(), k.dim(), "is_k_unitary: dimension mismatch");
  const CMatrix& km = k.k().matrix();
  return max_abs(a.adjoint() * km * a - km) <= tol::identity_check;
}

CMatrix metric_factor(const DeformedMetric& k) {
  Eigen::LLT<CMatrix> llt(k.k().matrix());
  detail::require(llt.info() == Eigen::Success, ErrorCode::not_positive, "metric_factor: K not positive");
  // K = L L† = K₀† K₀ with K₀ = L†.
  return llt.matrixL().adjoint();
}

CMatrix to_standard_unitary(const CMatrix& a, const DeformedMetric& k) {
  detail::require_same_dim(a.rows(), k.dim(), "to_standard_unitary: dimension mismatch");
  const CMatrix k0 = metric_factor(k);
  return k0 * a * k0.inverse();
}

}  // namespace geomq
