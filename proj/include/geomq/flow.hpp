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

#ifndef GEOMQ_FLOW_HPP
#define GEOMQ_FLOW_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geomq/projective.hpp"

namespace geomq {

using FieldFn = std::function<RVector(const RVector&)>;

FieldFn as_field_fn(const LinearVectorField& field);
FieldFn as_field_fn(const ProjectiveField& field);

struct IntegratorConfig {
  double h = 1e-3;
  double t_max = 1.0;
  /// Stop once ‖field(ψ)‖ drops below this. Zero disables the test.
  double convergence_eps = 1e-8;
  /// Project back onto the sphere of the seed's radius after every step.
  bool renormalize = false;
};

enum class StopReason { horizon, converged };

struct TrajectoryMeta {
  std::string field;
  double h = 0.0;  ///< actual spacing; t_max/steps when t_max is not a multiple of the requested h
  RealifiedVector seed;
  StopReason stop = StopReason::horizon;
  double final_field_norm = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<RealifiedVector> points;
  TrajectoryMeta meta;

  const RealifiedVector& final_point() const { return points.back(); }
  bool converged() const noexcept { return meta.stop == StopReason::converged; }
};

/// One classical Runge-Kutta step.
RVector rk4_step(const FieldFn& field, const RVector& psi, double h);

/// Fixed-step RK4. Throws Error(integration_failure) on NaN or overflow.
Trajectory integrate(const FieldFn& field, const RealifiedVector& psi0, const IntegratorConfig& cfg,
                     std::string descriptor = "field");
Trajectory integrate(const LinearVectorField& field, const RealifiedVector& psi0, const IntegratorConfig& cfg);
Trajectory integrate(const ProjectiveField& field, const RealifiedVector& psi0, const IntegratorConfig& cfg);

/// Endpoint of the flow at time t with convergence disabled.
RealifiedVector flow_to(const FieldFn& field, const RealifiedVector& psi0, double t, double h = 1e-3);

struct CommutationReport {
  bool commute = false;
  double defect = 0.0;  ///< ‖Φ¹_s∘Φ²_t(ψ₀) − Φ²_t∘Φ¹_s(ψ₀)‖
};

CommutationReport flows_commute(const FieldFn& f1, const FieldFn& f2, const RealifiedVector& psi0, double s,
                                double t, double tol, double h = 1e-3);

/// The qubit seed used by the figure presets: (q¹,p₁,q²,p₂) = (0.2, 0.3, 0.3, √0.78).
RealifiedVector figure_seed();

struct FigureRun {
  Trajectory primary;
  std::optional<Trajectory> companion;  ///< Γ flow for the comparison figures
};

/// Presets for the σ₃ flow experiments:
///   fig1   𝒴_{e₃} from figure_seed() until convergence
///   fig2   𝒳_{e₃} from figure_seed()
///   fig3   𝒳_{e₃} and Γ, both from figure_seed()
///   fig3b  𝒴_{e₃} from figure_seed() and Γ from (1,0,0,0)
/// Throws Error(invalid_argument) for unknown names.
FigureRun run_figure(std::string_view name);
std::vector<std::string> figure_names();

}  // namespace geomq

#endif  // GEOMQ_FLOW_HPP
