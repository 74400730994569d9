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

#include "geomq/projective.hpp"

#include <algorithm>
#include <random>

#include "geomq/flow.hpp"

namespace geomq {

namespace {

const Complex kI{0.0, 1.0};

double norm_sq_nonzero(const RealifiedVector& psi, const char* what) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw Error(ErrorCode::zero_vector, what);
  return n2;
}

// Hermitian and anti-Hermitian parts: a = h + i·k with h, k Hermitian.
std::pair<HermitianOperator, HermitianOperator> hermitian_split(const CMatrix& a) {
  return {HermitianOperator::symmetrized(a), HermitianOperator::symmetrized(CMatrix(-kI * a))};
}

}  // namespace

double expectation(const HermitianOperator& a, const RealifiedVector& psi) {
  return expectation_complex(a.matrix(), psi).real();
}

Complex expectation_complex(const CMatrix& a, const RealifiedVector& psi) {
  const double n2 = norm_sq_nonzero(psi, "expectation: zero vector");
  return quadratic_function_complex(a, psi) / n2;
}

RVector expectation_differential(const HermitianOperator& a, const RealifiedVector& psi) {
  const double n2 = norm_sq_nonzero(psi, "expectation_differential: zero vector");
  // d(f_A/‖ψ‖²) = df_A/‖ψ‖² − f_A·2ψ/‖ψ‖⁴
  return (quadratic_differential(a, psi) - 2.0 * expectation(a, psi) * psi) / n2;
}

RMatrix projected_metric_tensor(const RealifiedVector& psi) {
  const double n2 = norm_sq_nonzero(psi, "projected_metric_tensor: zero vector");
  const auto t = KahlerTensors::standard(psi.size() / 2);
  const RVector delta = psi;
  const RVector gamma = t.J * psi;
  return n2 * t.G - gamma * gamma.transpose() - delta * delta.transpose();
}

RMatrix projected_poisson_tensor(const RealifiedVector& psi) {
  const double n2 = norm_sq_nonzero(psi, "projected_poisson_tensor: zero vector");
  const auto t = KahlerTensors::standard(psi.size() / 2);
  const RVector delta = psi;
  const RVector gamma = t.J * psi;
  // With Ω(dq, dp) = +1 the correction enters with a plus sign; that is what puts ĝ(Δ) and ĝ(Γ) in the kernel.
  return n2 * t.Omega + (gamma * delta.transpose() - delta * gamma.transpose());
}

double projected_metric(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi) {
  detail::require_same_dim(a.dim(), b.dim(), "projected_metric: dimension mismatch");
  return expectation_differential(a, psi).dot(projected_metric_tensor(psi) * expectation_differential(b, psi));
}

double projected_poisson(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi) {
  detail::require_same_dim(a.dim(), b.dim(), "projected_poisson: dimension mismatch");
  return expectation_differential(a, psi).dot(projected_poisson_tensor(psi) * expectation_differential(b, psi));
}

RVector ProjectiveField::operator()(const RealifiedVector& psi) const {
  detail::require_same_dim(psi.size(), 2 * a_.dim(), "ProjectiveField: dimension mismatch");
  const RVector de = expectation_differential(a_, psi);
  const RMatrix tensor = kind_ == ProjectiveKind::gradient ? projected_metric_tensor(psi) : projected_poisson_tensor(psi);
  // Contraction in the first slot: vʲ = T(de, dxʲ) = (Tᵀ de)ʲ.
  return tensor.transpose() * de;
}

ProjectiveField projective_gradient(const HermitianOperator& a) {
  return ProjectiveField(a, ProjectiveKind::gradient);
}

ProjectiveField projective_hamiltonian(const HermitianOperator& a) {
  return ProjectiveField(a, ProjectiveKind::hamiltonian);
}

Complex star_on_expectations(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi) {
  // The product term uses the normalized expectations ⟨A⟩ = 2e_A.
  const double ea = expectation(a, psi);
  const double eb = expectation(b, psi);
  return Complex(2.0 * ea * eb + 0.5 * projected_metric(a, b, psi), 0.5 * projected_poisson(a, b, psi));
}

Complex star_on_expectations(const CMatrix& a, const CMatrix& b, const RealifiedVector& psi) {
  detail::require_square_finite(a, "star_on_expectations: bad matrix");
  detail::require_same_dim(a.rows(), b.rows(), "star_on_expectations: dimension mismatch");
  const auto [ah, ak] = hermitian_split(a);
  const auto [bh, bk] = hermitian_split(b);
  return star_on_expectations(ah, bh, psi) + kI * star_on_expectations(ah, bk, psi) +
         kI * star_on_expectations(ak, bh, psi) - star_on_expectations(ak, bk, psi);
}

TransformedExpectation::TransformedExpectation(const CMatrix& t, const HermitianOperator& a) {
  detail::require_square_finite(t, "gl_automorphism: bad matrix");
  detail::require_same_dim(t.rows(), a.dim(), "gl_automorphism: dimension mismatch");
  Eigen::FullPivLU<CMatrix> lu(t);
  detail::require(lu.isInvertible(), ErrorCode::singular, "gl_automorphism: T is singular");
  op_ = t * a.matrix() * lu.inverse();
}

TransformedExpectation gl_automorphism(const CMatrix& t, const HermitianOperator& a) {
  return TransformedExpectation(t, a);
}

bool same_ray(const RealifiedVector& a, const RealifiedVector& b, double tol) {
  norm_sq_nonzero(a, "same_ray: zero vector");
  norm_sq_nonzero(b, "same_ray: zero vector");
  detail::require_same_dim(a.size(), b.size(), "same_ray: dimension mismatch");
  const CVector za = complexify(a).normalized();
  const CVector zb = complexify(b).normalized();
  CMatrix stacked(2, za.size());
  stacked.row(0) = za.transpose();
  stacked.row(1) = zb.transpose();
  Eigen::JacobiSVD<CMatrix> svd(stacked);
  const auto& sv = svd.singularValues();
  return sv.size() < 2 || sv(1) < tol;
}

namespace {

// Gradient ascent of e_A on the unit sphere, optionally confined to the
// orthogonal complement of `exclude`.
CriticalPoint ascend(const HermitianOperator& a, RealifiedVector psi, const std::vector<RealifiedVector>& exclude,
                     const CriticalPointSearch& cfg) {
  const ProjectiveField field = projective_gradient(a);
  const auto project = [&](RVector v) {
    // Complex orthogonal projection: remove v's components along w and Jw.
    for (const auto& w : exclude) {
      const CVector zw = complexify(w);
      const CVector zv = complexify(v);
      v = realify(zv - zw * zw.dot(zv));
    }
    return v;
  };
  const FieldFn fn = [&](const RVector& x) { return project(field(project(x))); };

  const double spread = std::max(1.0, 2.0 * a.matrix().norm());
  const double h = std::min(cfg.h, 1.0 / spread);

  CriticalPoint cp;
  psi = project(psi).normalized();
  for (cp.steps = 0; cp.steps < cfg.max_steps; ++cp.steps) {
    cp.field_norm = fn(psi).norm();
    if (cp.field_norm < cfg.convergence_eps) {
      cp.converged = true;
      break;
    }
    psi = project(rk4_step(fn, psi, h)).normalized();
    if (!psi.allFinite()) throw Error(ErrorCode::integration_failure, "critical_points: non-finite state");
  }
  if (!cp.converged) cp.field_norm = fn(psi).norm();
  cp.psi = psi;
  cp.value = expectation(a, psi);
  const CVector z = complexify(psi);
  cp.eigen_residual = (a.matrix() * z - 2.0 * cp.value * z).norm();
  return cp;
}

}  // namespace

std::vector<CriticalPoint> critical_points(const HermitianOperator& a, const std::vector<RealifiedVector>& seeds,
                                           const CriticalPointSearch& cfg) {
  std::vector<CriticalPoint> out;
  out.reserve(seeds.size());
  for (const auto& seed : seeds) {
    detail::require_same_dim(seed.size(), 2 * a.dim(), "critical_points: dimension mismatch");
    norm_sq_nonzero(seed, "critical_points: zero seed");
    out.push_back(ascend(a, seed, {}, cfg));
  }
  return out;
}

std::vector<CriticalPoint> critical_spectrum(const HermitianOperator& a, std::uint64_t seed,
                                             const CriticalPointSearch& cfg) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<CriticalPoint> out;
  std::vector<RealifiedVector> found;
  for (Index k = 0; k < a.dim(); ++k) {
    RealifiedVector start(2 * a.dim());
    for (Index i = 0; i < start.size(); ++i) start(i) = normal(rng);
    CriticalPoint cp = ascend(a, start, found, cfg);
    found.push_back(cp.psi);
    out.push_back(std::move(cp));
  }
  std::stable_sort(out.begin(), out.end(), [](const CriticalPoint& x, const CriticalPoint& y) { return x.value > y.value; });
  return out;
}

}  // namespace geomq
