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

// Positive cone, density states, rank strata and the GL(n,ℂ) actions.
// Rank counts eigenvalues above 1e-8·Tr; rank-deficient density matrices are
// admitted, so the full-rank states form the open stratum.

#ifndef GEOMQ_DENSITY_HPP
#define GEOMQ_DENSITY_HPP

#include <map>
#include <vector>

#include "geomq/kahler.hpp"

namespace geomq {

class PositiveOperator {
 public:
  /// Throws not_positive if an eigenvalue is below −1e-10·max(1, Tr).
  explicit PositiveOperator(HermitianOperator omega);

  const HermitianOperator& op() const noexcept { return omega_; }
  const CMatrix& matrix() const noexcept { return omega_.matrix(); }
  Index dim() const noexcept { return omega_.dim(); }
  Index rank() const noexcept { return rank_; }
  double trace() const noexcept { return trace_; }
  /// Ascending.
  const RVector& eigenvalues() const noexcept { return eigenvalues_; }
  double min_eigenvalue() const noexcept { return eigenvalues_(0); }

 private:
  HermitianOperator omega_;
  RVector eigenvalues_;
  Index rank_ = 0;
  double trace_ = 0.0;
};

class DensityMatrix {
 public:
  /// Throws invalid_argument unless |Tr − 1| ≤ 1e-10.
  explicit DensityMatrix(PositiveOperator rho);
  /// Validates Hermiticity, positivity and trace.
  static DensityMatrix from_matrix(const CMatrix& m);
  /// The pure state |ψ⟩⟨ψ|/⟨ψ|ψ⟩ = 2μ_P(ψ).
  static DensityMatrix pure(const RealifiedVector& psi);
  static DensityMatrix maximally_mixed(Index n);

  const PositiveOperator& positive() const noexcept { return rho_; }
  const CMatrix& matrix() const noexcept { return rho_.matrix(); }
  const HermitianOperator& op() const noexcept { return rho_.op(); }
  Index dim() const noexcept { return rho_.dim(); }
  Index rank() const noexcept { return rho_.rank(); }

 private:
  PositiveOperator rho_;
};

/// RR†.
PositiveOperator factorize_positive(const CMatrix& r);

/// gωg†. Throws singular for non-invertible g.
PositiveOperator gl_action_cone(const CMatrix& g, const PositiveOperator& omega);
/// gρg†/Tr(gρg†).
DensityMatrix gl_action_states(const CMatrix& g, const DensityMatrix& rho);

Index stratum(const PositiveOperator& omega);
Index stratum(const DensityMatrix& rho);
/// Indices of the inputs grouped by rank.
std::map<Index, std::vector<std::size_t>> stratify(const std::vector<DensityMatrix>& states);

/// A real-linear map of ℝ²ⁿ is in GL(n,ℂ) iff it is invertible and commutes with J.
bool is_gl_member(const RMatrix& phi);

/// Index of the numerical rank: eigenvalues above 1e-8·max(Tr, tiny).
Index positive_rank(const RVector& eigenvalues, double trace);

}  // namespace geomq

#endif  // GEOMQ_DENSITY_HPP
