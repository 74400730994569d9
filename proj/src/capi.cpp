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

#include "geomq/geomq.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "geomq/checks.hpp"
#include "geomq/coadjoint.hpp"
#include "geomq/flow.hpp"
#include "geomq/gns.hpp"
#include "geomq/lindblad.hpp"

struct geomq_operator {
  geomq::HermitianOperator op;
};

struct geomq_trajectory {
  geomq::Trajectory traj;
};

struct geomq_gkls {
  geomq::DiagonalGKLS gen;
};

struct geomq_lindblad_trajectory {
  geomq::LindbladTrajectory traj;
  geomq::Index n;
};

namespace {

using geomq::CMatrix;
using geomq::Complex;
using geomq::Error;
using geomq::ErrorCode;
using geomq::Index;

thread_local std::string last_error;

struct NullPointer {
  const char* what;
};

template <typename F>
geomq_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return GEOMQ_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<geomq_status>(static_cast<int>(e.code()));
  } catch (const NullPointer& e) {
    last_error = e.what;
    return GEOMQ_ERR_NULL_POINTER;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GEOMQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GEOMQ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GEOMQ_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw NullPointer{what};
}

Index checked_dim(size_t n) {
  if (n == 0 || n > 4096) throw Error(ErrorCode::invalid_argument, "dimension must be between 1 and 4096");
  return static_cast<Index>(n);
}

CMatrix read_matrix(size_t n, const double* data) {
  need(data, "null matrix data");
  const Index d = checked_dim(n);
  CMatrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) m(i, j) = Complex(data[2 * (i * d + j)], data[2 * (i * d + j) + 1]);
  if (!m.allFinite()) throw Error(ErrorCode::non_finite, "matrix has non-finite entries");
  return m;
}

void write_matrix(const CMatrix& m, double* out) {
  need(out, "null output buffer");
  const Index d = m.rows();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      out[2 * (i * d + j)] = m(i, j).real();
      out[2 * (i * d + j) + 1] = m(i, j).imag();
    }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

long parse_int(const std::string& s, const char* what) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) throw Error(ErrorCode::invalid_argument, what);
  return v;
}

geomq::HermitianOperator named_operator(const std::string& name) {
  if (name.size() == 6 && name.rfind("sigma", 0) == 0 && name[5] >= '0' && name[5] <= '3')
    return geomq::pauli(name[5] - '0');
  if (name.rfind("identity:", 0) == 0) {
    const long n = parse_int(name.substr(9), "identity:<n> needs an integer n");
    return geomq::HermitianOperator::identity(checked_dim(static_cast<size_t>(std::max(0L, n))));
  }
  if (name.rfind("gellmann:", 0) == 0) {
    const std::string rest = name.substr(9);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::invalid_argument, "expected gellmann:<n>:<k>");
    const long n = parse_int(rest.substr(0, colon), "gellmann:<n>:<k> needs integers");
    const long k = parse_int(rest.substr(colon + 1), "gellmann:<n>:<k> needs integers");
    if (n < 1 || k < 0 || k >= n * n) throw Error(ErrorCode::invalid_argument, "gellmann index out of range");
    return geomq::gell_mann_basis(checked_dim(static_cast<size_t>(n)))[static_cast<size_t>(k)];
  }
  throw Error(ErrorCode::invalid_argument, "unknown operator name '" + name + "'");
}

std::vector<CMatrix> read_family(size_t m, size_t n, const double* data) {
  if (m > 0) need(data, "null operator family");
  std::vector<CMatrix> out;
  for (size_t k = 0; k < m; ++k) out.push_back(read_matrix(n, data + 2 * n * n * k));
  return out;
}

}  // namespace

extern "C" {

const char* geomq_version(void) { return "0.1.0"; }

const char* geomq_status_string(geomq_status status) {
  switch (status) {
    case GEOMQ_OK: return "ok";
    case GEOMQ_ERR_DIMENSION: return "dimension mismatch";
    case GEOMQ_ERR_NOT_HERMITIAN: return "operator is not Hermitian";
    case GEOMQ_ERR_NOT_POSITIVE: return "operator is not positive";
    case GEOMQ_ERR_SINGULAR: return "singular matrix";
    case GEOMQ_ERR_ZERO_VECTOR: return "zero vector";
    case GEOMQ_ERR_INVALID_SPEC: return "invalid GKLS specification";
    case GEOMQ_ERR_NON_FINITE: return "non-finite value";
    case GEOMQ_ERR_INTEGRATION: return "integration failure";
    case GEOMQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GEOMQ_ERR_NULL_POINTER: return "null pointer";
    case GEOMQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* geomq_last_error(void) { return last_error.c_str(); }

void geomq_string_free(char* s) { std::free(s); }

// ---- operators

geomq_status geomq_operator_create(size_t n, const double* entries, int symmetrize, geomq_operator** out) {
  return guarded([&] {
    need(out, "null output handle");
    const CMatrix m = read_matrix(n, entries);
    *out = new geomq_operator{symmetrize ? geomq::HermitianOperator::symmetrized(m) : geomq::HermitianOperator(m)};
  });
}

geomq_status geomq_operator_named(const char* name, geomq_operator** out) {
  return guarded([&] {
    need(name, "null name");
    need(out, "null output handle");
    *out = new geomq_operator{named_operator(name)};
  });
}

geomq_status geomq_operator_dim(const geomq_operator* op, size_t* n) {
  return guarded([&] {
    need(op, "null operator");
    need(n, "null output");
    *n = static_cast<size_t>(op->op.dim());
  });
}

geomq_status geomq_operator_entries(const geomq_operator* op, double* out) {
  return guarded([&] {
    need(op, "null operator");
    write_matrix(op->op.matrix(), out);
  });
}

void geomq_operator_destroy(geomq_operator* op) { delete op; }

// ---- flows

void geomq_flow_config_default(geomq_flow_config* cfg) {
  if (cfg == nullptr) return;
  const geomq::IntegratorConfig d;
  cfg->h = d.h;
  cfg->t_max = d.t_max;
  cfg->convergence_eps = d.convergence_eps;
  cfg->renormalize = d.renormalize ? 1 : 0;
}

geomq_status geomq_flow_integrate(const geomq_operator* op, geomq_field_kind kind, size_t n, const double* seed,
                                  const geomq_flow_config* cfg, geomq_trajectory** out) {
  return guarded([&] {
    need(seed, "null seed");
    need(cfg, "null config");
    need(out, "null output handle");
    geomq::IntegratorConfig c;
    c.h = cfg->h;
    c.t_max = cfg->t_max;
    c.convergence_eps = cfg->convergence_eps;
    c.renormalize = cfg->renormalize != 0;

    const bool needs_op = kind != GEOMQ_FIELD_DILATION && kind != GEOMQ_FIELD_PHASE;
    if (needs_op) need(op, "this field kind needs an operator");
    const Index dim = checked_dim(n);
    if (needs_op && op->op.dim() != dim) throw Error(ErrorCode::dimension_mismatch, "seed dimension differs from the operator");
    geomq::RVector psi(2 * dim);
    for (Index i = 0; i < psi.size(); ++i) psi(i) = seed[i];

    geomq::Trajectory t;
    switch (kind) {
      case GEOMQ_FIELD_HAMILTONIAN: t = geomq::integrate(geomq::hamiltonian_field(op->op), psi, c); break;
      case GEOMQ_FIELD_SCHRODINGER: t = geomq::integrate(geomq::schrodinger_field(op->op), psi, c); break;
      case GEOMQ_FIELD_GRADIENT: t = geomq::integrate(geomq::gradient_field(op->op), psi, c); break;
      case GEOMQ_FIELD_PROJECTIVE_HAMILTONIAN:
        t = geomq::integrate(geomq::projective_hamiltonian(op->op), psi, c);
        break;
      case GEOMQ_FIELD_PROJECTIVE_GRADIENT: t = geomq::integrate(geomq::projective_gradient(op->op), psi, c); break;
      case GEOMQ_FIELD_DILATION: t = geomq::integrate(geomq::dilation_field(dim), psi, c); break;
      case GEOMQ_FIELD_PHASE: t = geomq::integrate(geomq::phase_field(dim), psi, c); break;
      default: throw Error(ErrorCode::invalid_argument, "unknown field kind");
    }
    *out = new geomq_trajectory{std::move(t)};
  });
}

geomq_status geomq_flow_figure(const char* name, geomq_trajectory** primary, geomq_trajectory** companion) {
  return guarded([&] {
    need(name, "null figure name");
    need(primary, "null output handle");
    geomq::FigureRun run = geomq::run_figure(name);
    geomq_trajectory* second = nullptr;
    if (companion != nullptr && run.companion) second = new geomq_trajectory{std::move(*run.companion)};
    *primary = new geomq_trajectory{std::move(run.primary)};
    if (companion != nullptr) *companion = second;
  });
}

geomq_status geomq_trajectory_shape(const geomq_trajectory* t, size_t* rows, size_t* width) {
  return guarded([&] {
    need(t, "null trajectory");
    if (rows != nullptr) *rows = t->traj.points.size();
    if (width != nullptr) *width = t->traj.points.empty() ? 0 : static_cast<size_t>(t->traj.points.front().size());
  });
}

geomq_status geomq_trajectory_times(const geomq_trajectory* t, double* out) {
  return guarded([&] {
    need(t, "null trajectory");
    need(out, "null output buffer");
    std::copy(t->traj.times.begin(), t->traj.times.end(), out);
  });
}

geomq_status geomq_trajectory_points(const geomq_trajectory* t, double* out) {
  return guarded([&] {
    need(t, "null trajectory");
    need(out, "null output buffer");
    for (const auto& p : t->traj.points) out = std::copy(p.data(), p.data() + p.size(), out);
  });
}

geomq_status geomq_trajectory_info(const geomq_trajectory* t, double* h, int* converged, double* final_field_norm) {
  return guarded([&] {
    need(t, "null trajectory");
    if (h != nullptr) *h = t->traj.meta.h;
    if (converged != nullptr) *converged = t->traj.converged() ? 1 : 0;
    if (final_field_norm != nullptr) *final_field_norm = t->traj.meta.final_field_norm;
  });
}

void geomq_trajectory_destroy(geomq_trajectory* t) { delete t; }

// ---- GKLS

geomq_status geomq_gkls_from_spec(const geomq_operator* h, size_t m, const double* c, const double* f,
                                  geomq_gkls** out) {
  return guarded([&] {
    need(h, "null Hamiltonian");
    need(out, "null output handle");
    const auto n = static_cast<size_t>(h->op.dim());
    CMatrix cm(static_cast<Index>(m), static_cast<Index>(m));
    if (m > 0) cm = read_matrix(m, c);
    const geomq::GKLSSpec spec(h->op, cm, read_family(m, n, f));
    *out = new geomq_gkls{geomq::diagonalize(spec)};
  });
}

geomq_status geomq_gkls_from_diagonal(const geomq_operator* h, size_t m, const double* v, geomq_gkls** out) {
  return guarded([&] {
    need(h, "null Hamiltonian");
    need(out, "null output handle");
    *out = new geomq_gkls{geomq::DiagonalGKLS(h->op, read_family(m, static_cast<size_t>(h->op.dim()), v))};
  });
}

geomq_status geomq_gkls_dim(const geomq_gkls* g, size_t* n) {
  return guarded([&] {
    need(g, "null generator");
    need(n, "null output");
    *n = static_cast<size_t>(g->gen.dim());
  });
}

geomq_status geomq_gkls_apply(const geomq_gkls* g, const double* rho, double* out) {
  return guarded([&] {
    need(g, "null generator");
    write_matrix(geomq::apply_diagonal(g->gen, read_matrix(static_cast<size_t>(g->gen.dim()), rho)), out);
  });
}

void geomq_gkls_destroy(geomq_gkls* g) { delete g; }

void geomq_lindblad_config_default(geomq_lindblad_config* cfg) {
  if (cfg == nullptr) return;
  const geomq::LindbladConfig d;
  cfg->h = d.h;
  cfg->t_max = d.t_max;
  cfg->renormalize = d.renormalize ? 1 : 0;
  cfg->trace_tolerance = d.trace_tolerance;
  cfg->positivity_tolerance = d.positivity_tolerance;
}

geomq_status geomq_lindblad_evolve(const geomq_gkls* g, const double* rho0, const geomq_lindblad_config* cfg,
                                   geomq_lindblad_trajectory** out) {
  return guarded([&] {
    need(g, "null generator");
    need(cfg, "null config");
    need(out, "null output handle");
    geomq::LindbladConfig c;
    c.h = cfg->h;
    c.t_max = cfg->t_max;
    c.renormalize = cfg->renormalize != 0;
    c.trace_tolerance = cfg->trace_tolerance;
    c.positivity_tolerance = cfg->positivity_tolerance;
    const auto rho = geomq::DensityMatrix::from_matrix(read_matrix(static_cast<size_t>(g->gen.dim()), rho0));
    *out = new geomq_lindblad_trajectory{geomq::evolve(g->gen, rho, c), g->gen.dim()};
  });
}

geomq_status geomq_lindblad_shape(const geomq_lindblad_trajectory* t, size_t* rows, size_t* n) {
  return guarded([&] {
    need(t, "null trajectory");
    if (rows != nullptr) *rows = t->traj.states.size();
    if (n != nullptr) *n = static_cast<size_t>(t->n);
  });
}

geomq_status geomq_lindblad_times(const geomq_lindblad_trajectory* t, double* out) {
  return guarded([&] {
    need(t, "null trajectory");
    need(out, "null output buffer");
    std::copy(t->traj.times.begin(), t->traj.times.end(), out);
  });
}

geomq_status geomq_lindblad_state(const geomq_lindblad_trajectory* t, size_t row, double* out) {
  return guarded([&] {
    need(t, "null trajectory");
    if (row >= t->traj.states.size()) throw Error(ErrorCode::invalid_argument, "row out of range");
    write_matrix(t->traj.states[row], out);
  });
}

geomq_status geomq_lindblad_info(const geomq_lindblad_trajectory* t, double* h, double* max_trace_defect,
                                 double* min_eigenvalue) {
  return guarded([&] {
    need(t, "null trajectory");
    if (h != nullptr) *h = t->traj.h;
    if (max_trace_defect != nullptr) *max_trace_defect = t->traj.max_trace_defect;
    if (min_eigenvalue != nullptr) *min_eigenvalue = t->traj.min_eigenvalue;
  });
}

void geomq_lindblad_destroy(geomq_lindblad_trajectory* t) { delete t; }

// ---- coordinates and reports

geomq_status geomq_bloch_coords(size_t n, const double* rho, double* out) {
  return guarded([&] {
    need(out, "null output buffer");
    const geomq::RVector y = geomq::bloch_coords(geomq::HermitianOperator(read_matrix(n, rho)));
    std::copy(y.data(), y.data() + y.size(), out);
  });
}

geomq_status geomq_check_run(const char* suite, size_t n, int samples, uint64_t seed, double perturb,
                             char** json_out, int* all_passed) {
  return guarded([&] {
    need(suite, "null suite name");
    need(json_out, "null output");
    geomq::CheckOptions opts;
    opts.n = checked_dim(n);
    opts.samples = samples;
    opts.seed = seed;
    opts.perturb = perturb;
    const auto reports = geomq::run_checks(suite, opts);

    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["perturb"] = perturb;
    bool ok = true;
    auto& arr = doc["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json s;
      s["suite"] = r.suite;
      s["passes"] = r.passes();
      s["failures"] = r.failures();
      s["max_residual"] = r.max_residual();
      if (!r.dims.empty()) s["dims"] = r.dims;
      auto& props = s["properties"] = nlohmann::ordered_json::array();
      for (const auto& p : r.properties)
        props.push_back({{"name", p.name},
                         {"residual", p.residual},
                         {"tolerance", p.tolerance},
                         {"samples", p.samples},
                         {"passed", p.passed}});
      ok = ok && r.all_passed();
      arr.push_back(std::move(s));
    }
    doc["all_passed"] = ok;
    *json_out = dup_string(doc.dump(2));
    if (all_passed != nullptr) *all_passed = ok ? 1 : 0;
  });
}

geomq_status geomq_gns_report(size_t n, const double* rho, char** json_out) {
  return guarded([&] {
    need(json_out, "null output");
    const geomq::AlgebraState omega(geomq::DensityMatrix::from_matrix(read_matrix(n, rho)));
    const geomq::GNSRepresentation rep = geomq::build_gns(omega);
    const auto blocks = geomq::decompose(rep);
    const auto units = geomq::matrix_units(omega.n());

    double recovery = 0.0;
    double homomorphism = 0.0;
    for (const auto& a : units) {
      recovery = std::max(recovery, std::abs(rep.expectation(a) - omega(a)));
      for (const auto& b : units) homomorphism = std::max(homomorphism, geomq::max_abs(rep.pi(a * b) - rep.pi(a) * rep.pi(b)));
    }

    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["rank"] = omega.density().rank();
    doc["dim_H"] = rep.dim();
    doc["ideal_dim"] = geomq::gelfand_ideal(omega).size();
    auto& arr = doc["blocks"] = nlohmann::ordered_json::array();
    for (const auto& b : blocks) arr.push_back({{"p_alpha", b.p}, {"dim", b.dim}});
    doc["recovery_residual"] = recovery;
    doc["homomorphism_residual"] = homomorphism;
    doc["cyclic"] = geomq::is_cyclic(rep, rep.cyclic_vector());
    *json_out = dup_string(doc.dump(2));
  });
}

}  // extern "C"
