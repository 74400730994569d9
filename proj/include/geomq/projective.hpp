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

// Objects on ℝ²ⁿ∖{0} that descend to the complex projective space. Rays are
// represented by any nonzero representative; nothing here uses charts.

#ifndef GEOMQ_PROJECTIVE_HPP
#define GEOMQ_PROJECTIVE_HPP

#include <cstdint>
#include <vector>

#include "geomq/kahler.hpp"

namespace geomq {

/// e_A(ψ) = ⟨ψ|Aψ⟩ / (2⟨ψ|ψ⟩).
double expectation(const HermitianOperator& a, const RealifiedVector& psi);
/// Same for an arbitrary complex matrix (complex-valued).
Complex expectation_complex(const CMatrix& a, const RealifiedVector& psi);
/// de_A at ψ, as a covector.
RVector expectation_differential(const HermitianOperator& a, const RealifiedVector& psi);

/// G_P(ψ) = ⟨ψ|ψ⟩G − (Γ⊗Γ + Δ⊗Δ)(ψ), as a matrix acting on covectors.
RMatrix projected_metric_tensor(const RealifiedVector& psi);
/// Ω_P(ψ) = ⟨ψ|ψ⟩Ω − (Γ⊗Δ − Δ⊗Γ)(ψ).
RMatrix projected_poisson_tensor(const RealifiedVector& psi);

/// G_P(de_A, de_B)(ψ).
double projected_metric(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi);
/// Ω_P(de_A, de_B)(ψ).
double projected_poisson(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi);

enum class ProjectiveKind { hamiltonian, gradient };

/// 𝒳_A = Ω_P(de_A, ·) or 𝒴_A = G_P(de_A, ·). Nonlinear in ψ, degree one.
class ProjectiveField {
 public:
  ProjectiveField(HermitianOperator a, ProjectiveKind kind) : a_(std::move(a)), kind_(kind) {}

  RVector operator()(const RealifiedVector& psi) const;

  const HermitianOperator& op() const noexcept { return a_; }
  ProjectiveKind kind() const noexcept { return kind_; }
  Index n() const noexcept { return a_.dim(); }

 private:
  HermitianOperator a_;
  ProjectiveKind kind_;
};

ProjectiveField projective_gradient(const HermitianOperator& a);
ProjectiveField projective_hamiltonian(const HermitianOperator& a);

/// e_A ⋆ e_B at ψ through the projectable tensors; equals e_{AB}(ψ).
/// Complex matrices are handled by splitting into Hermitian parts.
Complex star_on_expectations(const CMatrix& a, const CMatrix& b, const RealifiedVector& psi);
Complex star_on_expectations(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi);

/// Φ_T(e_A) = e_{TAT⁻¹}. Holds the transformed operator.
class TransformedExpectation {
 public:
  TransformedExpectation(const CMatrix& t, const HermitianOperator& a);
  Complex operator()(const RealifiedVector& psi) const { return expectation_complex(op_, psi); }
  const CMatrix& op() const noexcept { return op_; }

 private:
  CMatrix op_;
};

TransformedExpectation gl_automorphism(const CMatrix& t, const HermitianOperator& a);

/// ℂ-collinearity of two nonzero representatives: the smaller singular value
/// of the stacked, row-normalized 2×n matrix is below tol.
bool same_ray(const RealifiedVector& a, const RealifiedVector& b, double tol = 1e-8);

struct CriticalPointSearch {
  double h = 0.01;
  double convergence_eps = 1e-8;  ///< on ‖𝒴_A(ψ)‖ at unit ψ
  std::int64_t max_steps = 2'000'000;
};

struct CriticalPoint {
  RealifiedVector psi;      ///< unit representative
  double value = 0.0;       ///< e_A(ψ*), half an eigenvalue
  double field_norm = 0.0;  ///< ‖𝒴_A(ψ*)‖ at termination
  double eigen_residual = 0.0;  ///< ‖Aψ* − 2·value·ψ*‖
  std::int64_t steps = 0;
  bool converged = false;
};

/// Normalized gradient flow of e_A from each seed; one result per seed.
std::vector<CriticalPoint> critical_points(const HermitianOperator& a, const std::vector<RealifiedVector>& seeds,
                                           const CriticalPointSearch& cfg = {});

/// All n critical values, found by gradient flow restricted to the
/// orthogonal complement of the eigenvectors already located. Seeds are drawn
/// from the given RNG seed. Sorted descending.
std::vector<CriticalPoint> critical_spectrum(const HermitianOperator& a, std::uint64_t seed,
                                             const CriticalPointSearch& cfg = {});

}  // namespace geomq

#endif  // GEOMQ_PROJECTIVE_HPP
