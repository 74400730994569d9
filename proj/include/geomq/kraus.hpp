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

// Kraus maps ρ ↦ Σ M_j ρ M_j†. vec() stacks columns: entry M(i,j) sits at
// index i + n·j.

#ifndef GEOMQ_KRAUS_HPP
#define GEOMQ_KRAUS_HPP

#include <optional>
#include <vector>

#include "geomq/density.hpp"

namespace geomq {

class KrausFamily {
 public:
  /// Nonempty, square, finite, common dimension.
  explicit KrausFamily(std::vector<CMatrix> ops);

  const std::vector<CMatrix>& ops() const noexcept { return ops_; }
  Index dim() const noexcept { return ops_.front().rows(); }
  std::size_t size() const noexcept { return ops_.size(); }

 private:
  std::vector<CMatrix> ops_;
};

/// Amplitude damping with M₁ = [[1,0],[0,√(1−γ)]], M₂ = [[0,√γ],[0,0]].
KrausFamily amplitude_damping(double gamma);

CMatrix apply(const KrausFamily& k, const CMatrix& rho);
PositiveOperator apply(const KrausFamily& k, const PositiveOperator& omega);

/// max |Σ M†M − 𝕀|.
double normalization_defect(const KrausFamily& k);
bool is_normalized(const KrausFamily& k);

/// {M_j M′_k}: apply(compose(K, K′), ρ) = apply(K, apply(K′, ρ)).
KrausFamily compose(const KrausFamily& k, const KrausFamily& k_prime);

CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, Index n);

class ChoiMatrix {
 public:
  explicit ChoiMatrix(CMatrix c, Index n);

  const CMatrix& matrix() const noexcept { return c_; }
  Index dim() const noexcept { return n_; }
  /// Ascending eigenvalues.
  const RVector& eigenvalues() const noexcept { return eigenvalues_; }
  double min_eigenvalue() const noexcept { return eigenvalues_(0); }
  /// Eigenvalues above 1e-8·Tr.
  Index rank() const noexcept { return rank_; }
  /// The channel recovered from the matrix: K(ρ)_ik = Σ_jl C_{(i+nj),(k+nl)} ρ_jl.
  CMatrix apply(const CMatrix& rho) const;

 private:
  CMatrix c_;
  Index n_;
  RVector eigenvalues_;
  Index rank_ = 0;
};

/// Σ_j vec(M_j) vec(M_j)†.
ChoiMatrix choi(const KrausFamily& k);
Index kraus_rank(const KrausFamily& k);

/// The single operator M with K(ρ) = MρM†, when the Choi rank is one and M is
/// invertible. M is phase-aligned with the family's first nonzero operator.
std::optional<CMatrix> invert(const KrausFamily& k);

}  // namespace geomq

#endif  // GEOMQ_KRAUS_HPP
