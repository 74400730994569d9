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

// geomq <flow|lindblad|check|gns|bloch> [flags]
//
// Exit codes: 0 ok, 1 property failure, 2 bad input, 3 integration failure,
// 4 GKLS precondition violated. Data goes to stdout or --out; diagnostics to
// stderr.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_io.hpp"
#include "geomq/geomq.h"

namespace {

using geomq::cli::Matrix;
using geomq::cli::ParseError;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kPropertyFailure = 1, kBadInput = 2, kIntegration = 3, kPrecondition = 4 };

struct ApiError {
  geomq_status status;
  std::string message;
};

void check(geomq_status s, const std::string& context) {
  if (s != GEOMQ_OK) throw ApiError{s, context + ": " + geomq_last_error()};
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using OperatorPtr = std::unique_ptr<geomq_operator, Deleter<geomq_operator, geomq_operator_destroy>>;
using TrajectoryPtr = std::unique_ptr<geomq_trajectory, Deleter<geomq_trajectory, geomq_trajectory_destroy>>;
using GKLSPtr = std::unique_ptr<geomq_gkls, Deleter<geomq_gkls, geomq_gkls_destroy>>;
using LindbladPtr =
    std::unique_ptr<geomq_lindblad_trajectory, Deleter<geomq_lindblad_trajectory, geomq_lindblad_destroy>>;

struct CString {
  char* p = nullptr;
  ~CString() { geomq_string_free(p); }
};

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  body(out);
  if (!out) throw ParseError("write to '" + path + "' failed");
}

// A summary goes to stdout when the data went to a file, else to stderr.
void summary(const std::string& out_path, const ordered_json& doc) {
  (out_path.empty() ? std::cerr : std::cout) << doc.dump(2) << '\n';
}

bool looks_like_name(const std::string& s) {
  return s.rfind("sigma", 0) == 0 || s.rfind("gellmann:", 0) == 0 || s.rfind("identity:", 0) == 0;
}

OperatorPtr load_operator(const std::string& spec, const std::string& name) {
  geomq_operator* raw = nullptr;
  if (looks_like_name(spec)) {
    check(geomq_operator_named(spec.c_str(), &raw), "operator '" + spec + "'");
  } else {
    const Matrix m = geomq::cli::select_operator(geomq::cli::parse_json(geomq::cli::read_source(spec), spec), name);
    check(geomq_operator_create(m.n, m.data.data(), 0, &raw), "operator");
  }
  return OperatorPtr(raw);
}

Matrix load_state(const std::string& spec) {
  return geomq::cli::parse_state(geomq::cli::parse_json(geomq::cli::read_source(spec), spec));
}

std::vector<double> bloch_of(const Matrix& rho) {
  std::vector<double> y(rho.n * rho.n);
  check(geomq_bloch_coords(rho.n, rho.data.data(), y.data()), "bloch");
  return y;
}

// ---------------------------------------------------------------- flow

struct FlowArgs {
  std::string figure;
  std::string op;
  std::string name;
  std::string kind = "projective-gradient";
  std::string seed;
  std::size_t dim = 0;
  double h = 1e-3;
  double t_max = 1.0;
  double eps = 1e-8;
  bool renormalize = false;
  bool bloch = false;
  std::size_t stride = 1;
  std::string out;
};

struct Samples {
  std::vector<double> times;
  std::vector<double> points;
  std::size_t rows = 0;
  std::size_t width = 0;
};

Samples read_trajectory(const geomq_trajectory* t) {
  Samples s;
  check(geomq_trajectory_shape(t, &s.rows, &s.width), "trajectory");
  s.times.resize(s.rows);
  s.points.resize(s.rows * s.width);
  check(geomq_trajectory_times(t, s.times.data()), "trajectory");
  check(geomq_trajectory_points(t, s.points.data()), "trajectory");
  return s;
}

void write_trajectory(std::ostream& out, const Samples& s, bool bloch, std::size_t stride) {
  const std::size_t n = s.width / 2;
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < s.rows; ++r) {
    if (r % stride != 0 && r + 1 != s.rows) continue;
    std::vector<double> row{s.times[r]};
    const std::vector<double> psi(s.points.begin() + static_cast<std::ptrdiff_t>(r * s.width),
                                  s.points.begin() + static_cast<std::ptrdiff_t>((r + 1) * s.width));
    if (bloch) {
      const auto y = bloch_of(geomq::cli::pure_density(psi));
      row.insert(row.end(), y.begin(), y.end());
    } else {
      row.insert(row.end(), psi.begin(), psi.end());
    }
    rows.push_back(std::move(row));
  }
  geomq::cli::write_csv(out, bloch ? geomq::cli::bloch_header(n) : geomq::cli::trajectory_header(n), rows);
}

ordered_json trajectory_summary(const geomq_trajectory* t, const Samples& s) {
  double h = 0.0, norm = 0.0;
  int converged = 0;
  check(geomq_trajectory_info(t, &h, &converged, &norm), "trajectory");
  ordered_json j;
  j["rows"] = s.rows;
  j["h"] = h;
  j["t_final"] = s.times.back();
  j["converged"] = converged != 0;
  j["final_field_norm"] = norm;
  j["final_point"] = std::vector<double>(s.points.end() - static_cast<std::ptrdiff_t>(s.width), s.points.end());
  return j;
}

const std::map<std::string, geomq_field_kind> kFieldKinds = {
    {"hamiltonian", GEOMQ_FIELD_HAMILTONIAN},
    {"schrodinger", GEOMQ_FIELD_SCHRODINGER},
    {"gradient", GEOMQ_FIELD_GRADIENT},
    {"projective-hamiltonian", GEOMQ_FIELD_PROJECTIVE_HAMILTONIAN},
    {"projective-gradient", GEOMQ_FIELD_PROJECTIVE_GRADIENT},
    {"dilation", GEOMQ_FIELD_DILATION},
    {"phase", GEOMQ_FIELD_PHASE},
};

int run_flow(const FlowArgs& a) {
  if (a.stride == 0) throw ParseError("--stride must be positive");
  TrajectoryPtr primary;
  TrajectoryPtr companion;
  ordered_json doc;
  try {
    if (!a.figure.empty()) {
      geomq_trajectory* p = nullptr;
      geomq_trajectory* c = nullptr;
      check(geomq_flow_figure(a.figure.c_str(), &p, &c), "figure '" + a.figure + "'");
      primary.reset(p);
      companion.reset(c);
      doc["figure"] = a.figure;
    } else {
      const geomq_field_kind kind = kFieldKinds.at(a.kind);
      const bool needs_op = kind != GEOMQ_FIELD_DILATION && kind != GEOMQ_FIELD_PHASE;
      OperatorPtr op;
      std::size_t n = a.dim;
      if (needs_op) {
        if (a.op.empty()) throw ParseError("--op is required for --kind " + a.kind);
        op = load_operator(a.op, a.name);
        check(geomq_operator_dim(op.get(), &n), "operator");
      }
      if (a.seed.empty()) throw ParseError("--seed is required without --figure");
      const std::vector<double> seed = geomq::cli::parse_list(a.seed);
      if (n == 0) n = seed.size() / 2;
      if (seed.size() != 2 * n)
        throw ParseError("--seed needs " + std::to_string(2 * n) + " numbers (q1,p1,q2,p2,...)");
      geomq_flow_config cfg;
      geomq_flow_config_default(&cfg);
      cfg.h = a.h;
      cfg.t_max = a.t_max;
      cfg.convergence_eps = a.eps;
      cfg.renormalize = a.renormalize ? 1 : 0;
      geomq_trajectory* p = nullptr;
      check(geomq_flow_integrate(op.get(), kind, n, seed.data(), &cfg, &p), "flow");
      primary.reset(p);
      doc["kind"] = a.kind;
    }
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.status == GEOMQ_ERR_INTEGRATION ? kIntegration : kBadInput;
  }

  const Samples s = read_trajectory(primary.get());
  emit(a.out, [&](std::ostream& o) { write_trajectory(o, s, a.bloch, a.stride); });
  doc["primary"] = trajectory_summary(primary.get(), s);
  doc["primary"]["path"] = a.out.empty() ? "-" : a.out;
  if (companion) {
    const Samples c = read_trajectory(companion.get());
    doc["companion"] = trajectory_summary(companion.get(), c);
    if (a.out.empty()) {
      doc["companion"]["path"] = nullptr;
      std::cerr << "note: companion trajectory not written; pass --out to get <stem>_gamma.csv\n";
    } else {
      const std::string path = geomq::cli::companion_path(a.out);
      emit(path, [&](std::ostream& o) { write_trajectory(o, c, a.bloch, a.stride); });
      doc["companion"]["path"] = path;
    }
  }
  summary(a.out, doc);
  return kOk;
}

// ---------------------------------------------------------------- lindblad

struct LindbladArgs {
  std::string spec;
  std::string rho0;
  double h = 1e-3;
  double t_max = 1.0;
  bool bloch = false;
  bool renormalize = false;
  double trace_tol = 1e-8;
  double positivity_tol = 1e-6;
  std::size_t stride = 1;
  std::string out;
};

int run_lindblad(const LindbladArgs& a) {
  if (a.stride == 0) throw ParseError("--stride must be positive");
  const auto file = geomq::cli::parse_gkls(geomq::cli::parse_json(geomq::cli::read_source(a.spec), a.spec));
  std::optional<Matrix> rho0 = file.rho0;
  if (!a.rho0.empty()) rho0 = load_state(a.rho0);
  if (!rho0) throw ParseError("no initial state: pass --rho0 or put \"rho0\" in the GKLS file");
  if (rho0->n != file.h.n) throw ParseError("rho0 dimension disagrees with H");
  const std::size_t n = file.h.n;

  GKLSPtr gen;
  try {
    geomq_operator* h = nullptr;
    check(geomq_operator_create(n, file.h.data.data(), 0, &h), "H");
    const OperatorPtr hp(h);
    std::vector<double> packed;
    for (const auto& op : file.ops) packed.insert(packed.end(), op.data.begin(), op.data.end());
    geomq_gkls* g = nullptr;
    if (file.diagonal)
      check(geomq_gkls_from_diagonal(hp.get(), file.ops.size(), packed.data(), &g), "GKLS spec");
    else
      check(geomq_gkls_from_spec(hp.get(), file.ops.size(), file.c.data.data(), packed.data(), &g), "GKLS spec");
    gen.reset(g);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << '\n';
    const bool precondition = e.status == GEOMQ_ERR_INVALID_SPEC || e.status == GEOMQ_ERR_NOT_HERMITIAN;
    return precondition ? kPrecondition : kBadInput;
  }

  geomq_lindblad_config cfg;
  geomq_lindblad_config_default(&cfg);
  cfg.h = a.h;
  cfg.t_max = a.t_max;
  cfg.renormalize = a.renormalize ? 1 : 0;
  cfg.trace_tolerance = a.trace_tol;
  cfg.positivity_tolerance = a.positivity_tol;
  LindbladPtr traj;
  try {
    geomq_lindblad_trajectory* t = nullptr;
    check(geomq_lindblad_evolve(gen.get(), rho0->data.data(), &cfg, &t), "evolve");
    traj.reset(t);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.status == GEOMQ_ERR_INTEGRATION ? kIntegration : kBadInput;
  }

  std::size_t rows = 0;
  check(geomq_lindblad_shape(traj.get(), &rows, nullptr), "trajectory");
  std::vector<double> times(rows);
  check(geomq_lindblad_times(traj.get(), times.data()), "trajectory");
  std::vector<std::vector<double>> table;
  Matrix state{n, std::vector<double>(2 * n * n)};
  for (std::size_t r = 0; r < rows; ++r) {
    if (r % a.stride != 0 && r + 1 != rows) continue;
    check(geomq_lindblad_state(traj.get(), r, state.data.data()), "trajectory");
    std::vector<double> row{times[r]};
    if (a.bloch) {
      const auto y = bloch_of(state);
      row.insert(row.end(), y.begin(), y.end());
    } else {
      row.insert(row.end(), state.data.begin(), state.data.end());
    }
    table.push_back(std::move(row));
  }
  emit(a.out, [&](std::ostream& o) {
    geomq::cli::write_csv(o, a.bloch ? geomq::cli::bloch_header(n) : geomq::cli::matrix_header(n), table);
  });

  double h = 0.0, defect = 0.0, min_eig = 0.0;
  check(geomq_lindblad_info(traj.get(), &h, &defect, &min_eig), "trajectory");
  ordered_json doc;
  doc["rows"] = rows;
  doc["h"] = h;
  doc["form"] = file.diagonal ? "H,V" : "H,c,F";
  // The loop always writes the last sample, so `state` holds the final ρ.
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += state.data[2 * (i * n + i)];
  doc["final_trace_defect"] = std::abs(trace - 1.0);
  doc["max_trace_defect"] = defect;
  doc["min_eigenvalue"] = min_eig;
  doc["path"] = a.out.empty() ? "-" : a.out;
  summary(a.out, doc);
  return kOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string suite = "all";
  std::size_t n = 2;
  int samples = 100;
  std::optional<std::uint64_t> seed;
  double perturb = 0.0;
  std::string out;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("GEOMQ_SEED");
  if (env == nullptr || *env == '\0') return 7;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || *env == '-') throw ParseError(std::string("GEOMQ_SEED is not an unsigned integer: '") + env + "'");
  return v;
}

int run_check(const CheckArgs& a) {
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  CString json;
  int ok = 0;
  const geomq_status s = geomq_check_run(a.suite.c_str(), a.n, a.samples, seed, a.perturb, &json.p, &ok);
  if (s != GEOMQ_OK) {
    std::cerr << "error: " << geomq_last_error() << '\n';
    return kBadInput;
  }
  emit(a.out, [&](std::ostream& o) { o << json.p << '\n'; });
  if (!ok) {
    const auto doc = nlohmann::json::parse(json.p);
    for (const auto& suite : doc["suites"])
      for (const auto& p : suite["properties"])
        if (!p["passed"].get<bool>())
          std::cerr << "FAIL " << suite["suite"].get<std::string>() << ": " << p["name"].get<std::string>()
                    << " residual " << p["residual"].dump() << " > " << p["tolerance"].dump() << '\n';
  }
  return ok ? kOk : kPropertyFailure;
}

// ---------------------------------------------------------------- gns, bloch

int run_gns(const std::string& state, const std::string& out) {
  const Matrix rho = load_state(state);
  CString json;
  if (geomq_gns_report(rho.n, rho.data.data(), &json.p) != GEOMQ_OK) {
    std::cerr << "error: " << geomq_last_error() << '\n';
    return kBadInput;
  }
  emit(out, [&](std::ostream& o) { o << json.p << '\n'; });
  return kOk;
}

int run_bloch(const std::string& state, const std::string& out) {
  const Matrix rho = load_state(state);
  std::vector<double> y;
  try {
    y = bloch_of(rho);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kBadInput;
  }
  double r2 = 0.0;
  for (std::size_t k = 1; k < y.size(); ++k) r2 += y[k] * y[k];
  ordered_json doc;
  doc["n"] = rho.n;
  doc["y"] = y;
  doc["radius_squared"] = r2;
  emit(out, [&](std::ostream& o) { o << doc.dump(2) << '\n'; });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric quantum mechanics toolkit"};
  app.set_version_flag("--version", geomq_version());
  app.require_subcommand(1);
  std::function<int()> action;

  FlowArgs fa;
  auto* flow = app.add_subcommand("flow", "Integrate a vector field and write the trajectory as CSV");
  auto* fig = flow->add_option("--figure", fa.figure, "Preset experiment")->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig3b"}));
  flow->add_option("--op", fa.op, "Operator: sigma0..sigma3, gellmann:<n>:<k>, identity:<n>, a JSON file, or inline JSON")->excludes(fig);
  flow->add_option("--name", fa.name, "Operator to pick from a file of named operators");
  flow->add_option("--kind", fa.kind, "Vector field")
      ->check(CLI::IsMember({"hamiltonian", "schrodinger", "gradient", "projective-hamiltonian", "projective-gradient", "dilation", "phase"}))
      ->capture_default_str()->excludes(fig);
  flow->add_option("--seed", fa.seed, "Initial point q1,p1,q2,p2,...")->excludes(fig);
  flow->add_option("--n", fa.dim, "Dimension for dilation and phase fields (default: from --seed)");
  flow->add_option("--step", fa.h, "Step size")->capture_default_str()->excludes(fig);
  flow->add_option("--tmax", fa.t_max, "Time horizon")->capture_default_str()->excludes(fig);
  flow->add_option("--eps", fa.eps, "Stop when the field norm drops below this; 0 disables")->capture_default_str()->excludes(fig);
  flow->add_flag("--renormalize", fa.renormalize, "Project back to the seed sphere after each step")->excludes(fig);
  flow->add_flag("--bloch", fa.bloch, "Write Bloch coordinates of the pure state instead of (q, p)");
  flow->add_option("--stride", fa.stride, "Write every k-th sample (the last is always written)")->capture_default_str();
  flow->add_option("--out", fa.out, "Output CSV (default stdout)");
  flow->callback([&] { action = [&] { return run_flow(fa); }; });

  LindbladArgs la;
  auto* lind = app.add_subcommand("lindblad", "Evolve a density matrix under a GKLS generator");
  lind->add_option("--spec", la.spec, "GKLS spec: {H, c, F} or {H, V}, file or inline JSON")->required();
  lind->add_option("--rho0", la.rho0, "Initial state {rho} or {psi}, file or inline JSON");
  lind->add_option("--step", la.h, "Step size")->capture_default_str();
  lind->add_option("--tmax", la.t_max, "Time horizon")->capture_default_str();
  lind->add_flag("--bloch", la.bloch, "Write Bloch coordinates instead of matrix entries");
  lind->add_flag("--renormalize", la.renormalize, "Rescale to unit trace after each step");
  lind->add_option("--trace-tol", la.trace_tol, "Abort when |Tr rho - 1| exceeds this")->capture_default_str();
  lind->add_option("--positivity-tol", la.positivity_tol, "Abort when an eigenvalue drops below minus this")->capture_default_str();
  lind->add_option("--stride", la.stride, "Write every k-th sample (the last is always written)")->capture_default_str();
  lind->add_option("--out", la.out, "Output CSV (default stdout)");
  lind->callback([&] { action = [&] { return run_lindblad(la); }; });

  CheckArgs ca;
  auto* chk = app.add_subcommand("check", "Run randomized property suites and print a JSON report");
  chk->add_option("--suite", ca.suite, "Suite name or all")
      ->check(CLI::IsMember({"all", "kahler", "brackets", "mu", "density", "kraus", "gkls", "gns", "closure", "spectral"}))
      ->capture_default_str();
  chk->add_option("--n", ca.n, "Hilbert space dimension")->check(CLI::Range(2, 16))->capture_default_str();
  chk->add_option("--samples", ca.samples, "Random draws per property")->check(CLI::PositiveNumber)->capture_default_str();
  chk->add_option("--seed", ca.seed, "RNG seed (default: $GEOMQ_SEED, else 7)");
  chk->add_option("--perturb", ca.perturb, "Shift one side of every property by this much; the run must then fail")->capture_default_str();
  chk->add_option("--out", ca.out, "Output JSON (default stdout)");
  chk->callback([&] { action = [&] { return run_check(ca); }; });

  std::string gns_state, gns_out;
  auto* gns = app.add_subcommand("gns", "GNS representation report for a density matrix");
  gns->add_option("--state,state", gns_state, "State {rho} or {psi}, file or inline JSON")->required();
  gns->add_option("--out", gns_out, "Output JSON (default stdout)");
  gns->callback([&] { action = [&] { return run_gns(gns_state, gns_out); }; });

  std::string bloch_state, bloch_out;
  auto* bloch = app.add_subcommand("bloch", "Bloch coordinates of a density matrix");
  bloch->add_option("--state,state", bloch_state, "State {rho} or {psi}, file or inline JSON")->required();
  bloch->add_option("--out", bloch_out, "Output JSON (default stdout)");
  bloch->callback([&] { action = [&] { return run_bloch(bloch_state, bloch_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.status == GEOMQ_ERR_INTEGRATION ? kIntegration : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
}
