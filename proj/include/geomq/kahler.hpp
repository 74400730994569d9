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

// The realified Hilbert space ℝ²ⁿ. Coordinates are interleaved
// (q¹, p₁, q², p₂, …) with zᵏ = qᵏ + i pₖ. Covariant tensors (g, ω) act on
// vectors, contravariant ones (G, Ω) on one-forms; all are constant 2n×2n
// matrices built from n.

#ifndef GEOMQ_KAHLER_HPP
#define GEOMQ_KAHLER_HPP

#include <string_view>
#include <vector>

#include "geomq/hermitian.hpp"

namespace geomq {

/// A point of ℝ²ⁿ. Plain Eigen vector; the dimension n is size()/2.
using RealifiedVector = RVector;

RealifiedVector realify(const CVector& z);
CVector complexify(const RealifiedVector& psi);

/// Complex n×n matrix A as the real 2n×2n matrix of ψ ↦ realify(A·complexify(ψ)).
RMatrix realify_operator(const CMatrix& a);
/// Inverse of realify_operator. Requires the input to commute with J.
CMatrix complexify_operator(const RMatrix& m);

struct KahlerTensors {
  Index n = 0;
  RMatrix g;      ///< metric, g(X,Y) = Xᵀ g Y
  RMatrix omega;  ///< symplectic form, ω(X,Y) = Xᵀ ω Y
  RMatrix J;      ///< complex structure acting on vectors, J² = −𝕀
  RMatrix G;      ///< inverse metric on one-forms
  RMatrix Omega;  ///< Poisson bivector, Ω(α,β) = αᵀ Ω β

  static KahlerTensors standard(Index n);
};

enum class FieldKind { hamiltonian, gradient, dilation, phase, other };

std::string_view to_string(FieldKind kind);

/// Linear vector field ψ ↦ Mψ on ℝ²ⁿ.
struct LinearVectorField {
  RMatrix matrix;
  FieldKind kind = FieldKind::other;

  Index n() const noexcept { return matrix.rows() / 2; }
  RVector operator()(const RVector& psi) const { return matrix * psi; }
};

/// f_A(ψ) = ½⟨ψ|Aψ⟩.
double quadratic_function(const HermitianOperator& a, const RealifiedVector& psi);
/// ½⟨ψ|Aψ⟩ for an arbitrary complex matrix; complex-valued.
Complex quadratic_function_complex(const CMatrix& a, const RealifiedVector& psi);
/// df_A at ψ, as a covector in coordinates.
RVector quadratic_differential(const HermitianOperator& a, const RealifiedVector& psi);

/// Ω(df_A, df_B)(ψ); equals f_{[A,B]}(ψ).
double poisson_bracket(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi);
/// Operator whose quadratic function is the Poisson bracket of f_A and f_B.
HermitianOperator poisson_bracket_operator(const HermitianOperator& a, const HermitianOperator& b);
/// G(df_A, df_B)(ψ); equals f_{AB+BA}(ψ).
double jordan_bracket_fn(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi);
/// ½G(df_A,df_B) + (i/2)Ω(df_A,df_B) at ψ; equals f_{AB}(ψ).
Complex star_product_fn(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi);

/// X_{f_A} = Ω(df_A, ·).
LinearVectorField hamiltonian_field(const HermitianOperator& a);
/// The opposite time sign, ż = −iAz; equal to X_{f_{−A}}.
LinearVectorField schrodinger_field(const HermitianOperator& a);
/// Y_{f_A} = G(df_A, ·).
LinearVectorField gradient_field(const HermitianOperator& a);
/// Δ = identity on ℝ²ⁿ.
LinearVectorField dilation_field(Index n);
/// Γ = J∘Δ.
LinearVectorField phase_field(Index n);

/// Vector-field Lie bracket of two linear fields, [X,Y]ψ = (M_Y M_X − M_X M_Y)ψ.
LinearVectorField field_bracket(const LinearVectorField& x, const LinearVectorField& y);

/// The Hermitian C with X_C closest to the given field (least squares over
/// the Hamiltonian subspace), and the residual of that projection.
struct HamiltonianProjection {
  HermitianOperator generator;
  double residual;
};
HamiltonianProjection project_to_hamiltonian(const LinearVectorField& field);

struct LieClosure {
  Index dimension = 0;
  std::vector<RMatrix> basis;  ///< orthonormal under the Frobenius product
};

/// Real dimension of the Lie algebra generated by the fields' matrices under
/// commutators, by iterated bracketing and rank saturation.
LieClosure lie_closure(const std::vector<LinearVectorField>& fields, double rank_tol = 1e-9);

}  // namespace geomq

#endif  // GEOMQ_KAHLER_HPP
