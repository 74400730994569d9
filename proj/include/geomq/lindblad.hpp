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

// GKLS generators in the (H, c, F) form and the diagonal (H, V_α) form.

#ifndef GEOMQ_LINDBLAD_HPP
#define GEOMQ_LINDBLAD_HPP

#include <vector>

#include "geomq/kraus.hpp"

namespace geomq {

/// Orthonormal, traceless under Tr(AB†): the generalized Gell-Mann matrices
/// divided by √2. n² − 1 elements.
std::vector<CMatrix> traceless_basis(Index n);

class GKLSSpec {
 public:
  /// Validates: c Hermitian and positive semidefinite (eigenvalues ≥ −1e-10),
  /// one F per row of c, at most n² − 1 of them, each traceless with
  /// Tr(F_i F_j†) = δ_ij to 1e-10. Violations throw invalid_spec.
  GKLSSpec(HermitianOperator h, CMatrix c, std::vector<CMatrix> f);

  const HermitianOperator& h() const noexcept { return h_; }
  const CMatrix& c() const noexcept { return c_; }
  const std::vector<CMatrix>& f() const noexcept { return f_; }
  Index dim() const noexcept { return h_.dim(); }

 private:
  HermitianOperator h_;
  CMatrix c_;
  std::vector<CMatrix> f_;
};

class DiagonalGKLS {
 public:
  /// G = Σ V_α†V_α is computed here.
  DiagonalGKLS(HermitianOperator h, std::vector<CMatrix> v);

  const HermitianOperator& h() const noexcept { return h_; }
  const std::vector<CMatrix>& v() const noexcept { return v_; }
  const HermitianOperator& g() const noexcept { return g_; }
  Index dim() const noexcept { return h_.dim(); }

  /// {V_α} with zero operators dropped; {0} when every V_α vanishes.
  KrausFamily kraus_family() const;

 private:
  HermitianOperator h_;
  std::vector<CMatrix> v_;
  HermitianOperator g_;
};

/// L(ρ) = −i[H,ρ] + ½Σ c_ij([F_i, ρF_j†] + [F_iρ, F_j†]).
CMatrix apply_generator(const GKLSSpec& spec, const CMatrix& rho);

/// c = UλU†, V_α = √λ_α Σ_i U_{iα} F_i.
DiagonalGKLS diagonalize(const GKLSSpec& spec);

/// L(ρ) = −i[H,ρ] − ½{G,ρ} + Σ V_α ρ V_α†.
CMatrix apply_diagonal(const DiagonalGKLS& d, const CMatrix& rho);

struct GKLSParts {
  CMatrix hamiltonian;  ///< −i[H,ρ]
  CMatrix gradient;     ///< −½{G,ρ}
  CMatrix kraus;        ///< Σ V_α ρ V_α†
};

GKLSParts decompose_parts(const DiagonalGKLS& d, const CMatrix& rho);

struct LindbladConfig {
  double h = 1e-3;
  double t_max = 1.0;
  /// Rescale to unit trace after each step. Off by default so drift stays observable.
  bool renormalize = false;
  double trace_tolerance = 1e-8;
  double positivity_tolerance = 1e-6;
};

struct LindbladTrajectory {
  std::vector<double> times;
  std::vector<CMatrix> states;
  double h = 0.0;  ///< actual spacing
  double max_trace_defect = 0.0;
  double min_eigenvalue = 0.0;  ///< smallest eigenvalue seen along the trajectory
};

/// Fixed-step RK4 for ρ̇ = L(ρ). Throws integration_failure when the trace
/// drifts past trace_tolerance or an eigenvalue falls below
/// −positivity_tolerance.
LindbladTrajectory evolve(const DiagonalGKLS& d, const DensityMatrix& rho0, const LindbladConfig& cfg);

}  // namespace geomq

#endif  // GEOMQ_LINDBLAD_HPP
