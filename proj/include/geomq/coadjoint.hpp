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

// The dual of the unitary Lie algebra, identified with Hermitian matrices.
//
// Factor convention: the linear function attached to A is F_A(ξ) = Tr(ξA)
// (plain trace), while dual_scalar uses ½Tr so the Pauli basis is
// orthonormal. With μ(ψ) = ½|ψ⟩⟨ψ| this gives F_A∘μ = f_A exactly. The image
// of μ_P has trace ½; the physical density matrix is 2μ_P(ψ).

#ifndef GEOMQ_COADJOINT_HPP
#define GEOMQ_COADJOINT_HPP

#include "geomq/projective.hpp"

namespace geomq {

/// (i/2)Tr(ξT) for Hermitian ξ and anti-Hermitian T.
double dual_pairing(const HermitianOperator& xi, const CMatrix& t);
/// −i(ξ₁ξ₂ − ξ₂ξ₁).
HermitianOperator dual_bracket(const HermitianOperator& xi1, const HermitianOperator& xi2);
/// ½Tr(ξ₁ξ₂).
double dual_scalar(const HermitianOperator& xi1, const HermitianOperator& xi2);
/// ξ ↦ −iξ, onto the anti-Hermitian matrices.
CMatrix hat(const HermitianOperator& xi);

/// F_A(ξ) = Tr(ξA).
double linear_function(const HermitianOperator& a, const HermitianOperator& xi);

/// R(ξ)(dF_A, dF_B) = Tr(ξ(AB+BA)).
double tensor_R(const HermitianOperator& xi, const HermitianOperator& a, const HermitianOperator& b);
/// Λ(ξ)(dF_A, dF_B) = Tr(ξ·(−i)(AB−BA)).
double tensor_Lambda(const HermitianOperator& xi, const HermitianOperator& a, const HermitianOperator& b);

/// X_Ĥ(ξ) = Λ(dF_H, ·)(ξ) = i(Hξ − ξH). Flow: ξ(t) = e^{iHt} ξ e^{−iHt}.
class HeisenbergField {
 public:
  explicit HeisenbergField(HermitianOperator h) : h_(std::move(h)) {}
  CMatrix operator()(const CMatrix& xi) const;
  const HermitianOperator& generator() const noexcept { return h_; }

 private:
  HermitianOperator h_;
};

HeisenbergField heisenberg_field(const HermitianOperator& h);
/// Closed-form flow e^{iHt} ξ e^{−iHt}.
HermitianOperator heisenberg_flow(const HermitianOperator& h, const HermitianOperator& xi, double t);
/// RK4 integration of the same flow with fixed step h_step.
HermitianOperator heisenberg_integrate(const HermitianOperator& h, const HermitianOperator& xi, double t,
                                       double h_step = 1e-3);

/// Y_Â(ξ) = R(dF_A, ·)(ξ) = Aξ + ξA.
CMatrix jordan_field(const HermitianOperator& a, const CMatrix& xi);

/// μ(ψ) = ½|ψ⟩⟨ψ|.
HermitianOperator momentum_map(const RealifiedVector& psi);
/// μ_P(ψ) = |ψ⟩⟨ψ| / (2⟨ψ|ψ⟩). Throws zero_vector.
HermitianOperator momentum_map_projective(const RealifiedVector& psi);
/// Tμ at ψ applied to the tangent vector v.
CMatrix momentum_map_differential(const RealifiedVector& psi, const RVector& v);
/// Tμ_P at ψ applied to v.
CMatrix momentum_map_projective_differential(const RealifiedVector& psi, const RVector& v);

/// Residuals (max-abs) of the identities relating Hilbert-space objects to
/// their counterparts on the dual.
struct MuResidualReport {
  double metric = 0.0;                   ///< G(df_A,df_B) vs R(A,B)∘μ
  double poisson = 0.0;                  ///< Ω(df_A,df_B) vs Λ(A,B)∘μ
  double projective_poisson = 0.0;       ///< Ω_P(de_A,de_B) vs Λ(A,B)∘μ_P
  double projective_metric = 0.0;        ///< G_P(de_A,de_B) vs R(A,B)∘μ_P − ⟨A⟩⟨B⟩
  double push_hamiltonian = 0.0;         ///< Tμ(X_A) vs X_Â∘μ
  double push_gradient = 0.0;            ///< Tμ(Y_A) vs Y_Â∘μ
  double push_dilation = 0.0;            ///< Tμ(Δ) vs 2μ
  double push_phase = 0.0;               ///< Tμ(Γ) vs 0
  double push_projective_hamiltonian = 0.0;  ///< Tμ_P(𝒳_A) vs X_Â∘μ_P

  double max() const noexcept;
};

/// ⟨A⟩⟨B⟩ above is the product of normalized expectations (2e_A)(2e_B).
MuResidualReport check_mu_related(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi);

/// Same, with the Hilbert-space side built from (a, b) and the dual side from
/// (a_dual, b_dual). Identical pairs give check_mu_related.
MuResidualReport mu_residuals(const HermitianOperator& a, const HermitianOperator& b, const HermitianOperator& a_dual,
                              const HermitianOperator& b_dual, const RealifiedVector& psi);

/// yᵏ = ½Tr(B_k ρ) against gell_mann_basis(n), which is σ₀..σ₃ for n = 2.
RVector bloch_coords(const HermitianOperator& rho);
/// ρ = Σ yᵏ B_k. The length of y must be a perfect square n².
HermitianOperator bloch_inverse(const RVector& y);
/// Σ_{k≥1} (yᵏ)², the squared distance from the maximally mixed point.
double bloch_radius_squared(const RVector& y);

}  // namespace geomq

#endif  // GEOMQ_COADJOINT_HPP
