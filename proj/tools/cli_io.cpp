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

#include "cli_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace geomq::cli {

using nlohmann::json;

std::string read_source(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

std::pair<double, double> parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("expected a number or [re, im], got " + j.dump());
}

Matrix parse_entries(const json& entries, std::optional<std::size_t> dim) {
  if (!entries.is_array() || entries.empty()) throw ParseError("entries must be a non-empty list of rows");
  const std::size_t n = entries.size();
  if (dim && *dim != n) throw ParseError("dim is " + std::to_string(*dim) + " but entries has " + std::to_string(n) + " rows");
  Matrix m{n, std::vector<double>(2 * n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != n) throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const auto [re, im] = parse_complex(row[k]);
      if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite matrix entry");
      m.data[2 * (i * n + k)] = re;
      m.data[2 * (i * n + k) + 1] = im;
    }
  }
  return m;
}

Matrix parse_operator(const json& j) {
  if (j.is_array()) return parse_entries(j);
  if (!j.is_object() || !j.contains("entries")) throw ParseError("operator needs an \"entries\" field");
  std::optional<std::size_t> dim;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_unsigned()) throw ParseError("\"dim\" must be a positive integer");
    dim = j["dim"].get<std::size_t>();
  }
  return parse_entries(j["entries"], dim);
}

Matrix select_operator(const json& j, const std::string& name) {
  if (j.is_object() && j.contains("entries")) return parse_operator(j);
  if (!j.is_object() || j.empty()) throw ParseError("expected an operator document or an object of named operators");
  if (name.empty()) {
    if (j.size() != 1) throw ParseError("file holds several operators; pick one with --name");
    return parse_operator(j.begin().value());
  }
  if (!j.contains(name)) throw ParseError("no operator named '" + name + "'");
  return parse_operator(j[name]);
}

std::vector<double> parse_psi(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("psi must be a non-empty list of [re, im] pairs");
  std::vector<double> out;
  for (const auto& z : j) {
    const auto [re, im] = parse_complex(z);
    out.push_back(re);
    out.push_back(im);
  }
  return out;
}

Matrix pure_density(const std::vector<double>& psi) {
  const std::size_t n = psi.size() / 2;
  double norm2 = 0.0;
  for (double x : psi) norm2 += x * x;
  if (!(norm2 > 0.0)) throw ParseError("psi must be nonzero");
  Matrix m{n, std::vector<double>(2 * n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      // z_i conj(z_k)
      const double ar = psi[2 * i], ai = psi[2 * i + 1], br = psi[2 * k], bi = psi[2 * k + 1];
      m.data[2 * (i * n + k)] = (ar * br + ai * bi) / norm2;
      m.data[2 * (i * n + k) + 1] = (ai * br - ar * bi) / norm2;
    }
  return m;
}

Matrix parse_state(const json& j) {
  if (!j.is_object()) throw ParseError("state must be an object with \"rho\" or \"psi\"");
  if (j.contains("rho")) {
    const json& r = j["rho"];
    return r.is_object() ? parse_operator(r) : parse_entries(r);
  }
  if (j.contains("psi")) return pure_density(parse_psi(j["psi"]));
  throw ParseError("state must have \"rho\" or \"psi\"");
}

namespace {

Matrix matrix_field(const json& j, const char* what) {
  try {
    return parse_operator(j);
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<Matrix> operator_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of operators");
  std::vector<Matrix> out;
  for (const auto& item : j) out.push_back(matrix_field(item, what));
  return out;
}

}  // namespace

GKLSFile parse_gkls(const json& j) {
  if (!j.is_object() || !j.contains("H")) throw ParseError("GKLS spec needs \"H\"");
  GKLSFile f;
  f.h = matrix_field(j["H"], "H");
  const bool has_v = j.contains("V");
  const bool has_cf = j.contains("c") || j.contains("F");
  if (has_v == has_cf) throw ParseError("GKLS spec needs either {c, F} or V");
  if (has_v) {
    f.diagonal = true;
    f.ops = operator_list(j["V"], "V");
  } else {
    if (!j.contains("c") || !j.contains("F")) throw ParseError("GKLS spec needs both \"c\" and \"F\"");
    f.ops = operator_list(j["F"], "F");
    if (f.ops.empty()) {
      if (!j["c"].is_array() || !j["c"].empty()) throw ParseError("c must be empty when F is");
    } else {
      f.c = matrix_field(j["c"], "c");
      if (f.c.n != f.ops.size()) throw ParseError("c must be m×m for m operators F");
    }
  }
  for (const auto& op : f.ops)
    if (op.n != f.h.n) throw ParseError("operator dimensions disagree with H");
  if (j.contains("rho0")) {
    f.rho0 = parse_state(j["rho0"].is_object() ? j["rho0"] : json{{"rho", j["rho0"]}});
    if (f.rho0->n != f.h.n) throw ParseError("rho0 dimension disagrees with H");
  }
  return f;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw ParseError("empty entry in list '" + text + "'");
    item = item.substr(first, last - first + 1);
    char* end = nullptr;
    // Underflow to a subnormal is fine; those values round-trip too.
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || !std::isfinite(v))
      throw ParseError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_double(row[k]);
    out << '\n';
  }
}

Table read_csv(std::istream& in) {
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row = parse_list(line);
    if (row.size() != t.header.size()) throw ParseError("CSV row width differs from header");
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<std::string> trajectory_header(std::size_t n) {
  std::vector<std::string> h{"t"};
  for (std::size_t k = 1; k <= n; ++k) {
    h.push_back("q" + std::to_string(k));
    h.push_back("p" + std::to_string(k));
  }
  return h;
}

std::vector<std::string> bloch_header(std::size_t n) {
  std::vector<std::string> h{"t"};
  for (std::size_t k = 0; k < n * n; ++k) h.push_back("y" + std::to_string(k));
  return h;
}

std::vector<std::string> matrix_header(std::size_t n) {
  std::vector<std::string> h{"t"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::string base = "rho" + std::to_string(i) + "_" + std::to_string(k);
      h.push_back(base + "_re");
      h.push_back(base + "_im");
    }
  return h;
}

std::string companion_path(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + "_gamma";
  return path.substr(0, dot) + "_gamma" + path.substr(dot);
}

}  // namespace geomq::cli
