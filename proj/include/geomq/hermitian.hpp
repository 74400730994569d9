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

#ifndef GEOMQ_HERMITIAN_HPP
#define GEOMQ_HERMITIAN_HPP

#include <vector>

#include "geomq/types.hpp"

namespace geomq {

/// Square complex matrix that equals its adjoint to within tol::hermitian.
/// Validated on construction; immutable afterwards.
class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix m);

  /// Hermitian part ½(m + m†) without validation. For inputs that are
  /// Hermitian up to roundoff from an algebraic identity.
  static HermitianOperator symmetrized(const CMatrix& m);
  static HermitianOperator identity(Index n);
  static HermitianOperator zero(Index n);

  const CMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

 private:
  struct Unchecked {};
  HermitianOperator(CMatrix m, Unchecked) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Positive-definite Hermitian K defining ⟨z,w⟩_K = z† K w.
class DeformedMetric {
 public:
  explicit DeformedMetric(HermitianOperator k);

  /// diag(α, 2−α), positive for 0 < α < 2.
  static DeformedMetric diagonal_alpha(double alpha);

  const HermitianOperator& k() const noexcept { return k_; }
  Index dim() const noexcept { return k_.dim(); }

 private:
  HermitianOperator k_;
};

/// Pauli matrices; index 0 is the identity.
HermitianOperator pauli(int k);

/// Hermitian basis of M_n(ℂ) orthonormal under ½Tr(B_j B_k). Index 0 is
/// √(2/n)·𝕀 and the rest are generalized Gell-Mann matrices; for n = 2 this
/// is exactly (σ₀, σ₁, σ₂, σ₃).
std::vector<HermitianOperator> gell_mann_basis(Index n);

/// Largest entrywise modulus of m − m†.
double hermiticity_defect(const CMatrix& m);
double max_abs(const CMatrix& m);

/// −i(AB − BA).
HermitianOperator lie_bracket(const HermitianOperator& a, const HermitianOperator& b);
/// AB + BA, no ½.
HermitianOperator jordan_bracket(const HermitianOperator& a, const HermitianOperator& b);
/// ½[A,B]₊ + (i/2)[A,B]; equals the associative product AB.
CMatrix star_decompose(const HermitianOperator& a, const HermitianOperator& b);

struct LieJordanResidual {
  double derivation = 0.0;  ///< ‖[A, B∘C] − [A,B]∘C − B∘[A,C]‖_max
  double associator = 0.0;  ///< ‖(A∘B)∘C − A∘(B∘C) − ħ²([[A,B],C] − [A,[B,C]])‖_max
};

LieJordanResidual lie_jordan_residual(const HermitianOperator& a, const HermitianOperator& b,
                                      const HermitianOperator& c, double hbar);

/// True iff both Lie-Jordan axioms hold entrywise within 1e-10.
bool check_lie_jordan_axioms(const HermitianOperator& a, const HermitianOperator& b,
                             const HermitianOperator& c, double hbar);

/// Σ_jk z̄_j K_jk w_k.
Complex k_inner(const CVector& z, const CVector& w, const DeformedMetric& k);

/// A†KA = K within 1e-10.
bool is_k_unitary(const CMatrix& a, const DeformedMetric& k);

/// Upper-triangular K₀ with K = K₀†K₀.
CMatrix metric_factor(const DeformedMetric& k);

/// K₀ A K₀⁻¹; sends K-unitaries to ordinary unitaries.
CMatrix to_standard_unitary(const CMatrix& a, const DeformedMetric& k);

}  // namespace geomq

#endif  // GEOMQ_HERMITIAN_HPP
