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

#include "geomq/coadjoint.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace geomq {

namespace {

const Complex kI{0.0, 1.0};

double trace_real(const CMatrix& m) { return m.trace().real(); }

}  // namespace

double dual_pairing(const HermitianOperator& xi, const CMatrix& t) {
  detail::require_square_finite(t, "dual_pairing: bad matrix");
  detail::require_same_dim(xi.dim(), t.rows(), "dual_pairing: dimension mismatch");
  const double scale = std::max(1.0, max_abs(t));
  detail::require(max_abs(t + t.adjoint()) <= tol::hermitian * scale, ErrorCode::invalid_argument,
                  "dual_pairing: T must be anti-Hermitian");
  return (0.5 * kI * (xi.matrix() * t).trace()).real();
}

HermitianOperator dual_bracket(const HermitianOperator& xi1, const HermitianOperator& xi2) {
  return lie_bracket(xi1, xi2);
}

double dual_scalar(const HermitianOperator& xi1, const HermitianOperator& xi2) {
  detail::require_same_dim(xi1.dim(), xi2.dim(), "dual_scalar: dimension mismatch");
  return 0.5 * trace_real(xi1.matrix() * xi2.matrix());
}

CMatrix hat(const HermitianOperator& xi) { return -kI * xi.matrix(); }

double linear_function(const HermitianOperator& a, const HermitianOperator& xi) {
  detail::require_same_dim(a.dim(), xi.dim(), "linear_function: dimension mismatch");
  return trace_real(xi.matrix() * a.matrix());
}

double tensor_R(const HermitianOperator& xi, const HermitianOperator& a, const HermitianOperator& b) {
  detail::require_same_dim(xi.dim(), a.dim(), "tensor_R: dimension mismatch");
  return linear_function(jordan_bracket(a, b), xi);
}

double tensor_Lambda(const HermitianOperator& xi, const HermitianOperator& a, const HermitianOperator& b) {
  detail::require_same_dim(xi.dim(), a.dim(), "tensor_Lambda: dimension mismatch");
  return linear_function(lie_bracket(a, b), xi);
}

CMatrix HeisenbergField::operator()(const CMatrix& xi) const {
  detail::require_same_dim(xi.rows(), h_.dim(), "HeisenbergField: dimension mismatch");
  return kI * (h_.matrix() * xi - xi * h_.matrix());
}

HeisenbergField heisenberg_field(const HermitianOperator& h) { return HeisenbergField(h); }

HermitianOperator heisenberg_flow(const HermitianOperator& h, const HermitianOperator& xi, double t) {
  detail::require_same_dim(h.dim(), xi.dim(), "heisenberg_flow: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix());
  const CVector phases = (kI * t * es.eigenvalues().cast<Complex>()).array().exp();
  const CMatrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return HermitianOperator::symmetrized(u * xi.matrix() * u.adjoint());
}

HermitianOperator heisenberg_integrate(const HermitianOperator& h, const HermitianOperator& xi, double t,
                                       double h_step) {
  detail::require(t >= 0.0 && h_step > 0.0, ErrorCode::invalid_argument, "heisenberg_integrate: need t >= 0, h > 0");
  const HeisenbergField field(h);
  CMatrix m = xi.matrix();
  if (t == 0.0) return xi;
  const auto steps = static_cast<std::int64_t>(std::ceil(t / h_step - 1e-9));
  const double dt = t / static_cast<double>(steps);
  for (std::int64_t k = 0; k < steps; ++k) {
    const CMatrix k1 = field(m);
    const CMatrix k2 = field(m + 0.5 * dt * k1);
    const CMatrix k3 = field(m + 0.5 * dt * k2);
    const CMatrix k4 = field(m + dt * k3);
    m += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return HermitianOperator::symmetrized(m);
}

CMatrix jordan_field(const HermitianOperator& a, const CMatrix& xi) {
  detail::require_same_dim(xi.rows(), a.dim(), "jordan_field: dimension mismatch");
  return a.matrix() * xi + xi * a.matrix();
}

HermitianOperator momentum_map(const RealifiedVector& psi) {
  const CVector z = complexify(psi);
  return HermitianOperator::symmetrized(0.5 * z * z.adjoint());
}

HermitianOperator momentum_map_projective(const RealifiedVector& psi) {
  const double n2 = psi.squaredNorm();
  detail::require(n2 > 0.0, ErrorCode::zero_vector, "momentum_map_projective: zero vector");
  const CVector z = complexify(psi);
  return HermitianOperator::symmetrized(z * z.adjoint() / (2.0 * n2));
}

CMatrix momentum_map_differential(const RealifiedVector& psi, const RVector& v) {
  detail::require_same_dim(psi.size(), v.size(), "momentum_map_differential: dimension mismatch");
  const CVector z = complexify(psi);
  const CVector w = complexify(v);
  return 0.5 * (z * w.adjoint() + w * z.adjoint());
}

CMatrix momentum_map_projective_differential(const RealifiedVector& psi, const RVector& v) {
  detail::require_same_dim(psi.size(), v.size(), "momentum_map_projective_differential: dimension mismatch");
  const double n2 = psi.squaredNorm();
  detail::require(n2 > 0.0, ErrorCode::zero_vector, "momentum_map_projective_differential: zero vector");
  const CVector z = complexify(psi);
  const CVector w = complexify(v);
  // d(zz†/(2‖z‖²)) = (zw† + wz†)/(2‖z‖²) − zz†·2Re⟨z,w⟩/(2‖z‖⁴)
  const double d_norm = 2.0 * psi.dot(v);
  return (z * w.adjoint() + w * z.adjoint()) / (2.0 * n2) - z * z.adjoint() * d_norm / (2.0 * n2 * n2);
}

double MuResidualReport::max() const noexcept {
  return std::max({metric, poisson, projective_poisson, projective_metric, push_hamiltonian, push_gradient,
                   push_dilation, push_phase, push_projective_hamiltonian});
}

MuResidualReport check_mu_related(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi) {
  return mu_residuals(a, b, a, b, psi);
}

MuResidualReport mu_residuals(const HermitianOperator& a, const HermitianOperator& b, const HermitianOperator& a_dual,
                              const HermitianOperator& b_dual, const RealifiedVector& psi) {
  detail::require_same_dim(a.dim(), b.dim(), "check_mu_related: dimension mismatch");
  detail::require_same_dim(a.dim(), a_dual.dim(), "check_mu_related: dimension mismatch");
  detail::require_same_dim(a.dim(), b_dual.dim(), "check_mu_related: dimension mismatch");
  detail::require_same_dim(2 * a.dim(), psi.size(), "check_mu_related: dimension mismatch");
  const Index n = a.dim();
  const HermitianOperator mu = momentum_map(psi);
  const HermitianOperator mu_p = momentum_map_projective(psi);

  MuResidualReport r;
  r.metric = std::abs(jordan_bracket_fn(a, b, psi) - tensor_R(mu, a_dual, b_dual));
  r.poisson = std::abs(poisson_bracket(a, b, psi) - tensor_Lambda(mu, a_dual, b_dual));
  r.projective_poisson = std::abs(projected_poisson(a, b, psi) - tensor_Lambda(mu_p, a_dual, b_dual));
  const double mean_a = linear_function(a_dual, mu_p) * 2.0;  // Tr(ρA) with ρ = 2μ_P
  const double mean_b = linear_function(b_dual, mu_p) * 2.0;
  r.projective_metric = std::abs(projected_metric(a, b, psi) - (tensor_R(mu_p, a_dual, b_dual) - mean_a * mean_b));

  r.push_hamiltonian = max_abs(momentum_map_differential(psi, hamiltonian_field(a)(psi)) -
                               heisenberg_field(a_dual)(mu.matrix()));
  r.push_gradient =
      max_abs(momentum_map_differential(psi, gradient_field(a)(psi)) - jordan_field(a_dual, mu.matrix()));
  r.push_dilation = max_abs(momentum_map_differential(psi, dilation_field(n)(psi)) - 2.0 * mu.matrix());
  r.push_phase = max_abs(momentum_map_differential(psi, phase_field(n)(psi)));
  r.push_projective_hamiltonian = max_abs(momentum_map_projective_differential(psi, projective_hamiltonian(a)(psi)) -
                                          heisenberg_field(a_dual)(mu_p.matrix()));
  return r;
}

RVector bloch_coords(const HermitianOperator& rho) {
  const auto basis = gell_mann_basis(rho.dim());
  RVector y(static_cast<Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    y(static_cast<Index>(k)) = 0.5 * trace_real(basis[k].matrix() * rho.matrix());
  return y;
}

HermitianOperator bloch_inverse(const RVector& y) {
  const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(y.size()))));
  detail::require(n >= 1 && n * n == y.size(), ErrorCode::dimension_mismatch,
                  "bloch_inverse: length must be a perfect square");
  detail::require(y.allFinite(), ErrorCode::non_finite, "bloch_inverse: non-finite coordinates");
  const auto basis = gell_mann_basis(n);
  CMatrix rho = CMatrix::Zero(n, n);
  for (Index k = 0; k < y.size(); ++k) rho += y(k) * basis[static_cast<std::size_t>(k)].matrix();
  return HermitianOperator::symmetrized(rho);
}

double bloch_radius_squared(const RVector& y) {
  detail::require(y.size() >= 1, ErrorCode::dimension_mismatch, "bloch_radius_squared: empty vector");
  return y.tail(y.size() - 1).squaredNorm();
}

}  // namespace geomq
