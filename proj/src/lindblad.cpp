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

#include "geomq/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace geomq {

namespace {

const Complex kI{0.0, 1.0};

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

void check_state(const CMatrix& rho, Index n, const char* what) {
  detail::require_square_finite(rho, what);
  detail::require_same_dim(rho.rows(), n, what);
}

}  // namespace

std::vector<CMatrix> traceless_basis(Index n) {
  const auto gm = gell_mann_basis(n);
  std::vector<CMatrix> out;
  out.reserve(gm.size() - 1);
  for (std::size_t k = 1; k < gm.size(); ++k) out.push_back(gm[k].matrix() / std::sqrt(2.0));
  return out;
}

GKLSSpec::GKLSSpec(HermitianOperator h, CMatrix c, std::vector<CMatrix> f)
    : h_(std::move(h)), c_(std::move(c)), f_(std::move(f)) {
  const Index n = h_.dim();
  const auto m = static_cast<Index>(f_.size());
  const auto fail = [](const std::string& why) { throw Error(ErrorCode::invalid_spec, "GKLSSpec: " + why); };
  if (c_.rows() != c_.cols()) fail("c must be square");
  if (c_.rows() != m) fail("c must have one row per F operator");
  if (m > n * n - 1) fail("at most n² − 1 F operators");
  if (!c_.allFinite()) fail("c must be finite");
  if (m > 0) {
    if (hermiticity_defect(c_) > tol::hermitian * std::max(1.0, max_abs(c_))) fail("c must be Hermitian");
    if (min_eigenvalue(c_) < -tol::positivity) fail("c must be positive semidefinite");
  }
  for (Index i = 0; i < m; ++i) {
    const CMatrix& fi = f_[static_cast<std::size_t>(i)];
    if (fi.rows() != n || fi.cols() != n || !fi.allFinite()) fail("F operators must be finite n×n matrices");
    if (std::abs(fi.trace()) > tol::identity_check) fail("F operators must be traceless");
    for (Index j = 0; j <= i; ++j) {
      const Complex ip = (fi * f_[static_cast<std::size_t>(j)].adjoint()).trace();
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(ip - expected) > tol::identity_check) fail("F operators must satisfy Tr(F_i F_j†) = δ_ij");
    }
  }
  c_ = 0.5 * (c_ + c_.adjoint()).eval();
}

DiagonalGKLS::DiagonalGKLS(HermitianOperator h, std::vector<CMatrix> v)
    : h_(std::move(h)), v_(std::move(v)), g_(HermitianOperator::zero(h_.dim())) {
  CMatrix g = CMatrix::Zero(h_.dim(), h_.dim());
  for (const auto& va : v_) {
    detail::require_square_finite(va, "DiagonalGKLS: V operators must be square and finite");
    detail::require_same_dim(va.rows(), h_.dim(), "DiagonalGKLS: V operators must match H");
    g += va.adjoint() * va;
  }
  g_ = HermitianOperator::symmetrized(g);
}

KrausFamily DiagonalGKLS::kraus_family() const {
  std::vector<CMatrix> ops;
  for (const auto& va : v_)
    if (max_abs(va) > 0.0) ops.push_back(va);
  if (ops.empty()) ops.push_back(CMatrix::Zero(dim(), dim()));
  return KrausFamily(std::move(ops));
}

CMatrix apply_generator(const GKLSSpec& spec, const CMatrix& rho) {
  check_state(rho, spec.dim(), "apply_generator: bad state");
  const CMatrix& h = spec.h().matrix();
  CMatrix out = -kI * commutator(h, rho);
  const auto& f = spec.f();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      const Complex cij = spec.c()(static_cast<Index>(i), static_cast<Index>(j));
      if (cij == Complex(0.0, 0.0)) continue;
      const CMatrix fj_dag = f[j].adjoint();
      out += 0.5 * cij * (commutator(f[i], rho * fj_dag) + commutator(f[i] * rho, fj_dag));
    }
  }
  return out;
}

DiagonalGKLS diagonalize(const GKLSSpec& spec) {
  const auto& f = spec.f();
  std::vector<CMatrix> v;
  if (f.empty()) return DiagonalGKLS(spec.h(), std::move(v));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(spec.c());
  const CMatrix& u = es.eigenvectors();
  v.reserve(f.size());
  for (Index alpha = 0; alpha < u.cols(); ++alpha) {
    const double lambda = std::max(0.0, es.eigenvalues()(alpha));
    CMatrix va = CMatrix::Zero(spec.dim(), spec.dim());
    for (Index i = 0; i < u.rows(); ++i) va += u(i, alpha) * f[static_cast<std::size_t>(i)];
    v.push_back(std::sqrt(lambda) * va);
  }
  return DiagonalGKLS(spec.h(), std::move(v));
}

GKLSParts decompose_parts(const DiagonalGKLS& d, const CMatrix& rho) {
  check_state(rho, d.dim(), "decompose_parts: bad state");
  GKLSParts p;
  p.hamiltonian = -kI * commutator(d.h().matrix(), rho);
  p.gradient = -0.5 * (d.g().matrix() * rho + rho * d.g().matrix());
  p.kraus = CMatrix::Zero(d.dim(), d.dim());
  for (const auto& va : d.v()) p.kraus += va * rho * va.adjoint();
  return p;
}

// Term by term, without the aggregated g, so it can be checked against decompose_parts.
CMatrix apply_diagonal(const DiagonalGKLS& d, const CMatrix& rho) {
  check_state(rho, d.dim(), "apply_diagonal: bad state");
  CMatrix out = -kI * commutator(d.h().matrix(), rho);
  for (const auto& va : d.v()) {
    const CMatrix vv = va.adjoint() * va;
    out += va * rho * va.adjoint() - 0.5 * (vv * rho + rho * vv);
  }
  return out;
}

LindbladTrajectory evolve(const DiagonalGKLS& d, const DensityMatrix& rho0, const LindbladConfig& cfg) {
  detail::require_same_dim(d.dim(), rho0.dim(), "evolve: dimension mismatch");
  detail::require(cfg.t_max > 0.0 && std::isfinite(cfg.t_max), ErrorCode::invalid_argument, "evolve: t must be > 0");
  detail::require(cfg.h > 0.0 && cfg.h <= cfg.t_max, ErrorCode::invalid_argument, "evolve: need 0 < h <= t");

  const double ratio = cfg.t_max / cfg.h;
  const double nearest = std::round(ratio);
  const auto steps = static_cast<std::int64_t>(std::abs(ratio - nearest) <= 1e-9 * nearest ? nearest : std::ceil(ratio));
  const double h = cfg.t_max / static_cast<double>(steps);

  LindbladTrajectory traj;
  traj.h = h;
  traj.times.reserve(static_cast<std::size_t>(steps + 1));
  traj.states.reserve(static_cast<std::size_t>(steps + 1));
  CMatrix rho = rho0.matrix();
  traj.min_eigenvalue = min_eigenvalue(rho);

  const auto L = [&d](const CMatrix& r) { return apply_diagonal(d, r); };
  for (std::int64_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * h;
    const double defect = std::abs(rho.trace().real() - 1.0);
    const double lowest = min_eigenvalue(rho);
    traj.max_trace_defect = std::max(traj.max_trace_defect, defect);
    traj.min_eigenvalue = std::min(traj.min_eigenvalue, lowest);
    if (!rho.allFinite() || defect > cfg.trace_tolerance || lowest < -cfg.positivity_tolerance) {
      std::ostringstream os;
      os << "evolve: step rejected at t = " << t << " (trace defect " << defect << ", min eigenvalue " << lowest
         << ")";
      throw Error(ErrorCode::integration_failure, os.str());
    }
    traj.times.push_back(t);
    traj.states.push_back(rho);
    if (k == steps) break;
    const CMatrix k1 = L(rho);
    const CMatrix k2 = L(rho + 0.5 * h * k1);
    const CMatrix k3 = L(rho + 0.5 * h * k2);
    const CMatrix k4 = L(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    if (cfg.renormalize) rho /= rho.trace().real();
  }
  return traj;
}

}  // namespace geomq
