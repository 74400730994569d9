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

#include "geomq/gns.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace geomq {

namespace {

struct Spectrum {
  std::vector<CVector> support;  // descending eigenvalue
  std::vector<double> weights;
  std::vector<CVector> kernel;
};

Spectrum split_spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const Index n = rho.dim();
  const double threshold = tol::rank_relative * rho.positive().trace();
  Spectrum s;
  for (Index k = n - 1; k >= 0; --k) {
    if (es.eigenvalues()(k) > threshold) {
      s.support.push_back(es.eigenvectors().col(k));
      s.weights.push_back(es.eigenvalues()(k));
    } else {
      s.kernel.push_back(es.eigenvectors().col(k));
    }
  }
  return s;
}

CMatrix unit_outer(Index n, Index i, const CVector& w) {
  CMatrix m = CMatrix::Zero(n, n);
  m.row(i) = w.adjoint();
  return m;
}

Index numerical_rank(const CMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return static_cast<Index>((sv.array() > rel_tol * std::max(1.0, sv(0))).count());
}

}  // namespace

Complex AlgebraState::operator()(const CMatrix& a) const {
  detail::require_square_finite(a, "AlgebraState: bad element");
  detail::require_same_dim(a.rows(), n(), "AlgebraState: dimension mismatch");
  return (rho_.matrix() * a).trace();
}

std::vector<CMatrix> gelfand_ideal(const AlgebraState& omega) {
  const Index n = omega.n();
  const Spectrum s = split_spectrum(omega.density());
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n) * s.kernel.size());
  for (const auto& k : s.kernel)
    for (Index i = 0; i < n; ++i) out.push_back(unit_outer(n, i, k));
  return out;
}

std::vector<CMatrix> matrix_units(Index n) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      CMatrix e = CMatrix::Zero(n, n);
      e(i, j) = 1.0;
      out.push_back(std::move(e));
    }
  return out;
}

GNSRepresentation build_gns(const AlgebraState& omega, GNSAction action) {
  const Index n = omega.n();
  const Spectrum s = split_spectrum(omega.density());
  if (action == GNSAction::right_printed)
    detail::require(s.kernel.empty(), ErrorCode::invalid_argument,
                    "build_gns: the right action is only defined for faithful states");

  // Representatives e_i w_j†, grouped by support vector w_j.
  std::vector<CMatrix> raw;
  for (const auto& w : s.support)
    for (Index i = 0; i < n; ++i) raw.push_back(unit_outer(n, i, w));
  const auto d = static_cast<Index>(raw.size());

  CMatrix g(d, d);
  for (Index k = 0; k < d; ++k)
    for (Index l = 0; l < d; ++l)
      g(k, l) = omega(raw[static_cast<std::size_t>(k)].adjoint() * raw[static_cast<std::size_t>(l)]);
  g = 0.5 * (g + g.adjoint()).eval();
  Eigen::LLT<CMatrix> llt(g);
  detail::require(llt.info() == Eigen::Success, ErrorCode::not_positive, "build_gns: Gram matrix not positive");

  // b = raw · L^{-†} has Gram L⁻¹ G L^{-†} = 𝕀.
  const CMatrix linv_adj = llt.matrixL().solve(CMatrix::Identity(d, d)).adjoint();
  GNSRepresentation rep(omega);
  rep.action_ = action;
  rep.basis_.assign(static_cast<std::size_t>(d), CMatrix::Zero(n, n));
  for (Index m = 0; m < d; ++m)
    for (Index k = 0; k < d; ++k) rep.basis_[static_cast<std::size_t>(m)] += linv_adj(k, m) * raw[static_cast<std::size_t>(k)];

  rep.gram_.resize(d, d);
  for (Index k = 0; k < d; ++k)
    for (Index l = 0; l < d; ++l)
      rep.gram_(k, l) = omega(rep.basis_[static_cast<std::size_t>(k)].adjoint() * rep.basis_[static_cast<std::size_t>(l)]);
  rep.omega_ = rep.vector_of(CMatrix::Identity(n, n));
  return rep;
}

CVector GNSRepresentation::vector_of(const CMatrix& a) const {
  CVector c(dim());
  for (Index k = 0; k < dim(); ++k) c(k) = state_(basis_[static_cast<std::size_t>(k)].adjoint() * a);
  return c;
}

CMatrix GNSRepresentation::pi(const CMatrix& b) const {
  detail::require_square_finite(b, "pi: bad element");
  detail::require_same_dim(b.rows(), state_.n(), "pi: dimension mismatch");
  const Index d = dim();
  CMatrix m(d, d);
  for (Index l = 0; l < d; ++l) {
    const CMatrix& al = basis_[static_cast<std::size_t>(l)];
    const CMatrix image = action_ == GNSAction::left ? CMatrix(b * al) : CMatrix(al * b);
    m.col(l) = vector_of(image);
  }
  return m;
}

Complex GNSRepresentation::expectation(const CMatrix& a) const { return omega_.dot(pi(a) * omega_); }

bool is_cyclic(const GNSRepresentation& rep, const CVector& xi) {
  detail::require_same_dim(xi.size(), rep.dim(), "is_cyclic: dimension mismatch");
  if (xi.norm() == 0.0) return false;
  const auto units = matrix_units(rep.state().n());
  CMatrix span(rep.dim(), static_cast<Index>(units.size()));
  for (std::size_t k = 0; k < units.size(); ++k) span.col(static_cast<Index>(k)) = rep.pi(units[k]) * xi;
  return numerical_rank(span, 1e-9) == rep.dim();
}

Index commutant_dimension(const std::vector<CMatrix>& images) {
  detail::require(!images.empty(), ErrorCode::invalid_argument, "commutant_dimension: no generators");
  const Index d = images.front().rows();
  const CMatrix eye = CMatrix::Identity(d, d);
  CMatrix system(static_cast<Index>(images.size()) * d * d, d * d);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const CMatrix& p = images[k];
    detail::require(p.rows() == d && p.cols() == d, ErrorCode::dimension_mismatch, "commutant_dimension: bad image");
    // vec(XP − PX) = (Pᵀ⊗𝕀 − 𝕀⊗P) vec(X) for column stacking.
    CMatrix block(d * d, d * d);
    for (Index r = 0; r < d; ++r)
      for (Index c = 0; c < d; ++c) block.block(r * d, c * d, d, d) = p(c, r) * eye;
    for (Index r = 0; r < d; ++r) block.block(r * d, r * d, d, d) -= p;
    system.middleRows(static_cast<Index>(k) * d * d, d * d) = block;
  }
  return d * d - numerical_rank(system, 1e-9);
}

Index commutant_dimension(const GNSRepresentation& rep, const CMatrix& isometry) {
  std::vector<CMatrix> images;
  for (const auto& e : matrix_units(rep.state().n())) {
    const CMatrix p = rep.pi(e);
    images.push_back(isometry.size() == 0 ? p : CMatrix(isometry.adjoint() * p * isometry));
  }
  return commutant_dimension(images);
}

Complex GNSBlock::pure_state(const GNSRepresentation& rep, const CMatrix& a) const {
  return omega.dot(rep.pi(a) * omega) / p;
}

CMatrix GNSBlock::pi(const GNSRepresentation& rep, const CMatrix& a) const {
  return isometry.adjoint() * rep.pi(a) * isometry;
}

std::vector<GNSBlock> decompose(const GNSRepresentation& rep) {
  detail::require(rep.action() == GNSAction::left, ErrorCode::invalid_argument,
                  "decompose: requires the left-action representation");
  const Index n = rep.state().n();
  const Spectrum s = split_spectrum(rep.state().density());
  const auto units = matrix_units(n);

  std::vector<GNSBlock> blocks;
  for (const auto& w : s.support) {
    GNSBlock b;
    b.projector = w * w.adjoint();
    CMatrix span(rep.dim(), static_cast<Index>(units.size()));
    for (std::size_t k = 0; k < units.size(); ++k) span.col(static_cast<Index>(k)) = rep.vector_of(units[k] * b.projector);
    Eigen::JacobiSVD<CMatrix> svd(span, Eigen::ComputeThinU);
    b.dim = numerical_rank(span, 1e-9);
    b.isometry = svd.matrixU().leftCols(b.dim);
    b.omega = rep.vector_of(b.projector);
    b.p = b.omega.squaredNorm();
    blocks.push_back(std::move(b));
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const GNSBlock& x, const GNSBlock& y) { return x.p > y.p; });
  return blocks;
}

}  // namespace geomq
