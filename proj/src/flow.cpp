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

#include "geomq/flow.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geomq {

namespace {

std::string describe(const LinearVectorField& f) {
  std::ostringstream os;
  os << to_string(f.kind) << "(n=" << f.n() << ")";
  return os.str();
}

std::string describe(const ProjectiveField& f) {
  std::ostringstream os;
  os << (f.kind() == ProjectiveKind::gradient ? "projective-gradient" : "projective-hamiltonian") << "(n=" << f.n()
     << ")";
  return os.str();
}

// Number of uniform steps covering [0, t]. A ratio within 1e-9 of an integer
// counts as exact so that t = k·h does not pick up a spurious extra step.
std::int64_t step_count(double t, double h) {
  const double ratio = t / h;
  const double nearest = std::round(ratio);
  if (nearest >= 1.0 && std::abs(ratio - nearest) <= 1e-9 * nearest) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::ceil(ratio));
}

}  // namespace

FieldFn as_field_fn(const LinearVectorField& field) {
  return [m = field.matrix](const RVector& psi) -> RVector { return m * psi; };
}

FieldFn as_field_fn(const ProjectiveField& field) {
  return [field](const RVector& psi) { return field(psi); };
}

RVector rk4_step(const FieldFn& field, const RVector& psi, double h) {
  const RVector k1 = field(psi);
  const RVector k2 = field(psi + 0.5 * h * k1);
  const RVector k3 = field(psi + 0.5 * h * k2);
  const RVector k4 = field(psi + h * k3);
  return psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory integrate(const FieldFn& field, const RealifiedVector& psi0, const IntegratorConfig& cfg,
                     std::string descriptor) {
  detail::require(cfg.h > 0.0 && std::isfinite(cfg.h), ErrorCode::invalid_argument, "integrate: h must be > 0");
  detail::require(cfg.t_max > 0.0 && std::isfinite(cfg.t_max), ErrorCode::invalid_argument,
                  "integrate: t_max must be > 0");
  detail::require(cfg.convergence_eps >= 0.0, ErrorCode::invalid_argument, "integrate: convergence_eps must be >= 0");
  detail::require(psi0.size() > 0 && psi0.allFinite(), ErrorCode::non_finite, "integrate: seed must be finite");

  const std::int64_t steps = step_count(cfg.t_max, cfg.h);
  const double h = cfg.t_max / static_cast<double>(steps);
  const double radius = psi0.norm();
  if (cfg.renormalize) detail::require(radius > 0.0, ErrorCode::zero_vector, "integrate: cannot renormalize zero seed");

  Trajectory traj;
  traj.meta.field = std::move(descriptor);
  traj.meta.h = h;
  traj.meta.seed = psi0;
  traj.times.reserve(static_cast<std::size_t>(std::min<std::int64_t>(steps + 1, 1 << 22)));
  traj.points.reserve(traj.times.capacity());

  RVector psi = psi0;
  for (std::int64_t k = 0;; ++k) {
    const RVector k1 = field(psi);
    traj.times.push_back(static_cast<double>(k) * h);
    traj.points.push_back(psi);
    traj.meta.final_field_norm = k1.norm();
    if (cfg.convergence_eps > 0.0 && traj.meta.final_field_norm < cfg.convergence_eps) {
      traj.meta.stop = StopReason::converged;
      break;
    }
    if (k == steps) break;
    const RVector k2 = field(psi + 0.5 * h * k1);
    const RVector k3 = field(psi + 0.5 * h * k2);
    const RVector k4 = field(psi + h * k3);
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (cfg.renormalize) psi *= radius / psi.norm();
    if (!psi.allFinite()) {
      std::ostringstream os;
      os << "integrate: non-finite state at step " << (k + 1) << " (t = " << static_cast<double>(k + 1) * h
         << ") for " << traj.meta.field;
      throw Error(ErrorCode::integration_failure, os.str());
    }
  }
  return traj;
}

Trajectory integrate(const LinearVectorField& field, const RealifiedVector& psi0, const IntegratorConfig& cfg) {
  detail::require_same_dim(field.matrix.rows(), psi0.size(), "integrate: field and seed dimensions differ");
  return integrate(as_field_fn(field), psi0, cfg, describe(field));
}

Trajectory integrate(const ProjectiveField& field, const RealifiedVector& psi0, const IntegratorConfig& cfg) {
  detail::require_same_dim(2 * field.n(), psi0.size(), "integrate: field and seed dimensions differ");
  return integrate(as_field_fn(field), psi0, cfg, describe(field));
}

RealifiedVector flow_to(const FieldFn& field, const RealifiedVector& psi0, double t, double h) {
  if (t == 0.0) return psi0;
  IntegratorConfig cfg;
  cfg.h = h;
  cfg.t_max = std::abs(t);
  cfg.convergence_eps = 0.0;
  if (t > 0.0) return integrate(field, psi0, cfg).final_point();
  const FieldFn backward = [&field](const RVector& psi) -> RVector { return -field(psi); };
  return integrate(backward, psi0, cfg).final_point();
}

CommutationReport flows_commute(const FieldFn& f1, const FieldFn& f2, const RealifiedVector& psi0, double s,
                                double t, double tol, double h) {
  const RealifiedVector a = flow_to(f1, flow_to(f2, psi0, t, h), s, h);
  const RealifiedVector b = flow_to(f2, flow_to(f1, psi0, s, h), t, h);
  CommutationReport r;
  r.defect = (a - b).norm();
  r.commute = r.defect < tol;
  return r;
}

RealifiedVector figure_seed() {
  RealifiedVector psi(4);
  psi << 0.2, 0.3, 0.3, std::sqrt(0.78);
  return psi;
}

std::vector<std::string> figure_names() { return {"fig1", "fig2", "fig3", "fig3b"}; }

FigureRun run_figure(std::string_view name) {
  const HermitianOperator s3 = pauli(3);
  const RealifiedVector seed = figure_seed();
  const FieldFn gamma = as_field_fn(phase_field(2));

  // Gradient runs stop on convergence; the Hamiltonian runs cover several
  // periods of the slow frequency 1 + 2e₃ = 0.26.
  IntegratorConfig gradient_cfg;
  gradient_cfg.h = 1e-3;
  gradient_cfg.t_max = 30.0;
  gradient_cfg.convergence_eps = 1e-8;

  IntegratorConfig periodic_cfg;
  periodic_cfg.h = 1e-3;
  periodic_cfg.t_max = 50.0;
  periodic_cfg.convergence_eps = 0.0;

  IntegratorConfig gamma_cfg;
  gamma_cfg.h = 1e-3;
  gamma_cfg.t_max = 2.0 * 3.14159265358979323846;
  gamma_cfg.convergence_eps = 0.0;

  FigureRun run;
  if (name == "fig1") {
    run.primary = integrate(projective_gradient(s3), seed, gradient_cfg);
  } else if (name == "fig2") {
    run.primary = integrate(projective_hamiltonian(s3), seed, periodic_cfg);
  } else if (name == "fig3") {
    run.primary = integrate(projective_hamiltonian(s3), seed, periodic_cfg);
    run.companion = integrate(gamma, seed, periodic_cfg, "phase(n=2)");
  } else if (name == "fig3b") {
    run.primary = integrate(projective_gradient(s3), seed, gradient_cfg);
    RealifiedVector e1 = RealifiedVector::Zero(4);
    e1(0) = 1.0;
    run.companion = integrate(gamma, e1, gamma_cfg, "phase(n=2)");
  } else {
    throw Error(ErrorCode::invalid_argument, "run_figure: unknown figure '" + std::string(name) + "'");
  }
  return run;
}

}  // namespace geomq
