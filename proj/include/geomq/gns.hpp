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

// GNS construction for M_n(ℂ) and a state ω(a) = Tr(ρa). In finite dimensions
// the quotient is already complete, so the pre-Hilbert and Hilbert spaces
// coincide. Vectors of the representation space are coordinate vectors in an
// orthonormal basis Ψ_{a_k} of the quotient.

#ifndef GEOMQ_GNS_HPP
#define GEOMQ_GNS_HPP

#include <vector>

#include "geomq/density.hpp"

namespace geomq {

class AlgebraState {
 public:
  explicit AlgebraState(DensityMatrix rho) : rho_(std::move(rho)) {}

  Complex operator()(const CMatrix& a) const;
  const DensityMatrix& density() const noexcept { return rho_; }
  Index n() const noexcept { return rho_.dim(); }

 private:
  DensityMatrix rho_;
};

/// Basis of {a : ω(a†a) = 0} = {a : a·P_supp = 0}; n·(n − rank ρ) elements.
std::vector<CMatrix> gelfand_ideal(const AlgebraState& omega);

enum class GNSAction {
  left,           ///< π(b)Ψ_a = Ψ_{ba}, a *-homomorphism
  right_printed,  ///< π(b)Ψ_a = Ψ_{ab}, an anti-homomorphism; faithful states only
};

class GNSRepresentation {
 public:
  Index dim() const noexcept { return static_cast<Index>(basis_.size()); }
  /// Algebra representatives a_k, orthonormal under ⟨Ψ_a|Ψ_b⟩ = ω(a†b).
  const std::vector<CMatrix>& basis() const noexcept { return basis_; }
  /// Gram matrix of basis(); the identity up to roundoff.
  const CMatrix& gram() const noexcept { return gram_; }
  /// Coordinates of Ω = Ψ_𝕀.
  const CVector& cyclic_vector() const noexcept { return omega_; }
  GNSAction action() const noexcept { return action_; }
  const AlgebraState& state() const noexcept { return state_; }

  /// Coordinates of Ψ_a.
  CVector vector_of(const CMatrix& a) const;
  /// Matrix of π(b) in the orthonormal basis.
  CMatrix pi(const CMatrix& b) const;
  /// ⟨Ω|π(a)Ω⟩.
  Complex expectation(const CMatrix& a) const;

 private:
  friend GNSRepresentation build_gns(const AlgebraState& omega, GNSAction action);
  explicit GNSRepresentation(AlgebraState s) : state_(std::move(s)) {}

  AlgebraState state_;
  GNSAction action_ = GNSAction::left;
  std::vector<CMatrix> basis_;
  CMatrix gram_;
  CVector omega_;
};

/// Throws invalid_argument for right_printed with a non-faithful state.
GNSRepresentation build_gns(const AlgebraState& omega, GNSAction action = GNSAction::left);

/// Whether span{π(E_ij)ξ} is the whole space.
bool is_cyclic(const GNSRepresentation& rep, const CVector& xi);

/// Dimension of the commutant {X : Xπ(a) = π(a)X for all a}.
Index commutant_dimension(const std::vector<CMatrix>& images);
/// Commutant of π(M_n) restricted to the columns of `isometry` (all of it when empty).
Index commutant_dimension(const GNSRepresentation& rep, const CMatrix& isometry = CMatrix());

struct GNSBlock {
  double p = 0.0;     ///< ⟨Ω_α|Ω_α⟩
  Index dim = 0;
  CMatrix isometry;   ///< dim_H × dim, orthonormal columns spanning the block
  CVector omega;      ///< Ω_α in full coordinates
  CMatrix projector;  ///< the rank-one spectral projector P_α of ρ

  /// ξ_α(a) = p⁻¹⟨Ω_α|π(a)Ω_α⟩.
  Complex pure_state(const GNSRepresentation& rep, const CMatrix& a) const;
  /// π restricted to the block.
  CMatrix pi(const GNSRepresentation& rep, const CMatrix& a) const;
};

/// Splits the left-action representation along rank-one spectral projectors
/// of ρ: block α is the range of Ψ_a ↦ Ψ_{aP_α}. Sorted by descending p.
std::vector<GNSBlock> decompose(const GNSRepresentation& rep);

/// E_ij, i, j = 0..n−1.
std::vector<CMatrix> matrix_units(Index n);

}  // namespace geomq

#endif  // GEOMQ_GNS_HPP
