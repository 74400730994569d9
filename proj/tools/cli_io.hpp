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

// File formats for the command-line tool. Matrices are carried as the C
// interface expects them: 2n² doubles, row-major, (re, im) interleaved.

#ifndef GEOMQ_TOOLS_CLI_IO_HPP
#define GEOMQ_TOOLS_CLI_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace geomq::cli {

/// Malformed input. Maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Matrix {
  std::size_t n = 0;
  std::vector<double> data;  ///< 2n², interleaved
};

/// Reads a whole file, or returns `arg` itself when it starts with '{' or '['.
std::string read_source(const std::string& arg);
nlohmann::json parse_json(const std::string& text, const std::string& origin);

/// A complex number is [re, im] or a bare real.
std::pair<double, double> parse_complex(const nlohmann::json& j);

/// Entries as a list of rows. `dim`, when given, must match.
Matrix parse_entries(const nlohmann::json& entries, std::optional<std::size_t> dim = std::nullopt);
/// { "dim": n, "entries": [...] }.
Matrix parse_operator(const nlohmann::json& j);
/// Either an operator document, or an object of named operator documents
/// from which `name` (or the only one when `name` is empty) is taken.
Matrix select_operator(const nlohmann::json& j, const std::string& name);

/// { "rho": entries } or { "psi": [[re, im], …] }; the latter becomes
/// |ψ⟩⟨ψ|/⟨ψ|ψ⟩.
Matrix parse_state(const nlohmann::json& j);
/// [[re, im], …] into realified (q¹, p₁, …).
std::vector<double> parse_psi(const nlohmann::json& j);

struct GKLSFile {
  Matrix h;
  bool diagonal = false;     ///< true for the {H, V} form
  Matrix c;                  ///< (H, c, F) form only
  std::vector<Matrix> ops;   ///< F_i or V_α
  std::optional<Matrix> rho0;
};
/// { "H": …, "c": …, "F": [...] } or { "H": …, "V": [...] }, optional "rho0".
/// H, c and each operator may be entries or {dim, entries} documents.
GKLSFile parse_gkls(const nlohmann::json& j);

/// Comma-separated doubles, e.g. "0.2,0.3,0.3,0.88".
std::vector<double> parse_list(const std::string& text);

/// 17 significant digits; strtod reads it back bit-exactly.
std::string format_double(double x);

/// Header line plus one row per sample, all values through format_double.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
Table read_csv(std::istream& in);

/// "t,q1,p1,q2,p2,…" for a realified vector of length 2n.
std::vector<std::string> trajectory_header(std::size_t n);
/// "t,y0,…,y{n²−1}".
std::vector<std::string> bloch_header(std::size_t n);
/// "t,rho0_0_re,rho0_0_im,rho0_1_re,…".
std::vector<std::string> matrix_header(std::size_t n);

/// |ψ⟩⟨ψ|/⟨ψ|ψ⟩ from a realified vector.
Matrix pure_density(const std::vector<double>& psi);

/// foo/bar.csv → foo/bar_gamma.csv.
std::string companion_path(const std::string& path);

}  // namespace geomq::cli

#endif  // GEOMQ_TOOLS_CLI_IO_HPP
