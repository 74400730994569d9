/* Copyright 2026 The geomq Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libgeomq.
 *
 * Complex n×n matrices cross the boundary as 2n² doubles, row-major, with
 * real and imaginary parts interleaved: m[2(i·n + j)] = Re m_ij and
 * m[2(i·n + j) + 1] = Im m_ij. Realified vectors use the ordering
 * (q¹, p₁, q², p₂, …) with z_k = q^k + i p_k.
 *
 * Every function returning geomq_status leaves a thread-local message behind
 * on failure; read it with geomq_last_error(). Output handles are written only
 * on success. Handles are not safe for concurrent mutation, but every handle
 * here is immutable after creation.
 */

#ifndef GEOMQ_GEOMQ_H
#define GEOMQ_GEOMQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GEOMQ_BUILDING)
#    define GEOMQ_API __declspec(dllexport)
#  else
#    define GEOMQ_API __declspec(dllimport)
#  endif
#else
#  define GEOMQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum geomq_status {
  GEOMQ_OK = 0,
  GEOMQ_ERR_DIMENSION = 1,
  GEOMQ_ERR_NOT_HERMITIAN = 2,
  GEOMQ_ERR_NOT_POSITIVE = 3,
  GEOMQ_ERR_SINGULAR = 4,
  GEOMQ_ERR_ZERO_VECTOR = 5,
  GEOMQ_ERR_INVALID_SPEC = 6,
  GEOMQ_ERR_NON_FINITE = 7,
  GEOMQ_ERR_INTEGRATION = 8,
  GEOMQ_ERR_INVALID_ARGUMENT = 9,
  GEOMQ_ERR_NULL_POINTER = 10,
  GEOMQ_ERR_INTERNAL = 99
} geomq_status;

typedef enum geomq_field_kind {
  GEOMQ_FIELD_HAMILTONIAN = 0, /* dz/dt = +iAz */
  GEOMQ_FIELD_GRADIENT = 1,
  GEOMQ_FIELD_PROJECTIVE_HAMILTONIAN = 2,
  GEOMQ_FIELD_PROJECTIVE_GRADIENT = 3,
  GEOMQ_FIELD_DILATION = 4, /* operator ignored, may be NULL */
  GEOMQ_FIELD_PHASE = 5,    /* operator ignored, may be NULL */
  GEOMQ_FIELD_SCHRODINGER = 6 /* Hamiltonian flow with the opposite time sign, dz/dt = -iAz */
} geomq_field_kind;

typedef struct geomq_operator geomq_operator;
typedef struct geomq_trajectory geomq_trajectory;
typedef struct geomq_gkls geomq_gkls;
typedef struct geomq_lindblad_trajectory geomq_lindblad_trajectory;

GEOMQ_API const char* geomq_version(void);
GEOMQ_API const char* geomq_status_string(geomq_status status);
/* Message of the last failure on this thread; "" when none. */
GEOMQ_API const char* geomq_last_error(void);

/* Frees strings returned through char** outputs. */
GEOMQ_API void geomq_string_free(char* s);

/* ---- Hermitian operators ---- */

/* With symmetrize != 0 the input is replaced by (M + M†)/2; otherwise a
 * non-Hermitian input fails with GEOMQ_ERR_NOT_HERMITIAN. */
GEOMQ_API geomq_status geomq_operator_create(size_t n, const double* entries, int symmetrize, geomq_operator** out);
/* "sigma0".."sigma3", "identity:<n>", or "gellmann:<n>:<k>" (k = 0 is the
 * scaled identity). */
GEOMQ_API geomq_status geomq_operator_named(const char* name, geomq_operator** out);
GEOMQ_API geomq_status geomq_operator_dim(const geomq_operator* op, size_t* n);
/* Writes 2n² doubles. */
GEOMQ_API geomq_status geomq_operator_entries(const geomq_operator* op, double* out);
GEOMQ_API void geomq_operator_destroy(geomq_operator* op);

/* ---- Flows on the realified Hilbert space ---- */

typedef struct geomq_flow_config {
  double h;
  double t_max;
  double convergence_eps; /* 0 disables early stopping */
  int renormalize;
} geomq_flow_config;

GEOMQ_API void geomq_flow_config_default(geomq_flow_config* cfg);

/* seed holds 2n doubles; n must equal the operator dimension when an operator is needed. */
GEOMQ_API geomq_status geomq_flow_integrate(const geomq_operator* op, geomq_field_kind kind, size_t n,
                                            const double* seed, const geomq_flow_config* cfg,
                                            geomq_trajectory** out);
/* Presets "fig1", "fig2", "fig3", "fig3b". companion may be NULL; it receives
 * NULL when the preset has no companion trajectory. */
GEOMQ_API geomq_status geomq_flow_figure(const char* name, geomq_trajectory** primary,
                                         geomq_trajectory** companion);

/* rows = number of samples, width = 2n. */
GEOMQ_API geomq_status geomq_trajectory_shape(const geomq_trajectory* t, size_t* rows, size_t* width);
GEOMQ_API geomq_status geomq_trajectory_times(const geomq_trajectory* t, double* out);
/* rows × width doubles, row-major. */
GEOMQ_API geomq_status geomq_trajectory_points(const geomq_trajectory* t, double* out);
/* Any output pointer may be NULL. */
GEOMQ_API geomq_status geomq_trajectory_info(const geomq_trajectory* t, double* h, int* converged,
                                             double* final_field_norm);
GEOMQ_API void geomq_trajectory_destroy(geomq_trajectory* t);

/* ---- GKLS generators and Lindblad evolution ---- */

/* (H, c, F) form: c is m×m, f holds m operators of 2n² doubles each.
 * Precondition failures return GEOMQ_ERR_INVALID_SPEC. */
GEOMQ_API geomq_status geomq_gkls_from_spec(const geomq_operator* h, size_t m, const double* c, const double* f,
                                            geomq_gkls** out);
/* (H, V_α) form: v holds m operators of 2n² doubles each. */
GEOMQ_API geomq_status geomq_gkls_from_diagonal(const geomq_operator* h, size_t m, const double* v,
                                                geomq_gkls** out);
GEOMQ_API geomq_status geomq_gkls_dim(const geomq_gkls* g, size_t* n);
/* out = L(rho); both 2n² doubles. */
GEOMQ_API geomq_status geomq_gkls_apply(const geomq_gkls* g, const double* rho, double* out);
GEOMQ_API void geomq_gkls_destroy(geomq_gkls* g);

typedef struct geomq_lindblad_config {
  double h;
  double t_max;
  int renormalize;
  double trace_tolerance;
  double positivity_tolerance;
} geomq_lindblad_config;

GEOMQ_API void geomq_lindblad_config_default(geomq_lindblad_config* cfg);

/* rho0 must be a density matrix (Hermitian, positive, unit trace). */
GEOMQ_API geomq_status geomq_lindblad_evolve(const geomq_gkls* g, const double* rho0,
                                             const geomq_lindblad_config* cfg, geomq_lindblad_trajectory** out);
GEOMQ_API geomq_status geomq_lindblad_shape(const geomq_lindblad_trajectory* t, size_t* rows, size_t* n);
GEOMQ_API geomq_status geomq_lindblad_times(const geomq_lindblad_trajectory* t, double* out);
/* Writes the state at sample `row` as 2n² doubles. */
GEOMQ_API geomq_status geomq_lindblad_state(const geomq_lindblad_trajectory* t, size_t row, double* out);
GEOMQ_API geomq_status geomq_lindblad_info(const geomq_lindblad_trajectory* t, double* h, double* max_trace_defect,
                                           double* min_eigenvalue);
GEOMQ_API void geomq_lindblad_destroy(geomq_lindblad_trajectory* t);

/* ---- Coordinates and reports ---- */

/* yᵏ = ½Tr(B_k ρ) against the generalized Pauli basis; writes n² doubles. */
GEOMQ_API geomq_status geomq_bloch_coords(size_t n, const double* rho, double* out);

/* Runs a property suite ("all" for every suite). json_out receives
 * {"n","samples","seed","perturb","suites":[{suite,passes,failures,
 * max_residual,properties:[…],dims?}],"all_passed"}; free it with
 * geomq_string_free. all_passed may be NULL. */
GEOMQ_API geomq_status geomq_check_run(const char* suite, size_t n, int samples, uint64_t seed, double perturb,
                                       char** json_out, int* all_passed);

/* GNS report for the density matrix rho (2n² doubles):
 * {"n","rank","dim_H","ideal_dim","blocks":[{"p_alpha","dim"}],
 *  "recovery_residual","homomorphism_residual","cyclic"}. */
GEOMQ_API geomq_status geomq_gns_report(size_t n, const double* rho, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GEOMQ_GEOMQ_H */
