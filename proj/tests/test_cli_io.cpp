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

#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>

#include <doctest.h>

#include "cli_io.hpp"

using namespace geomq::cli;
using nlohmann::json;

TEST_SUITE("cli_io") {
  TEST_CASE("CSV round trip is bit exact") {
    const std::vector<std::vector<double>> rows{
        {0.1, -1.0 / 3.0, 1e-300},
        {std::numeric_limits<double>::denorm_min(), 6.02214076e23, -0.0},
        {std::nextafter(1.0, 2.0), std::numeric_limits<double>::max(), 2.5}};
    std::stringstream ss;
    write_csv(ss, {"t", "q1", "p1"}, rows);
    const Table t = read_csv(ss);
    CHECK(t.header == std::vector<std::string>{"t", "q1", "p1"});
    REQUIRE(t.rows.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) CHECK(std::memcmp(&t.rows[i][k], &rows[i][k], sizeof(double)) == 0);
  }

  TEST_CASE("CSV errors") {
    std::stringstream empty;
    CHECK_THROWS_AS(read_csv(empty), ParseError);
    std::stringstream ragged("a,b\n1,2\n3\n");
    CHECK_THROWS_AS(read_csv(ragged), ParseError);
  }

  TEST_CASE("operator documents") {
    const Matrix m = parse_operator(json::parse(R"({"dim": 2, "entries": [[1, [0, -1]], [[0, 1], 2]]})"));
    CHECK(m.n == 2);
    CHECK(m.data == std::vector<double>{1, 0, 0, -1, 0, 1, 2, 0});
    CHECK(parse_operator(json::parse("[[1, 0], [0, 1]]")).n == 2);
    CHECK_THROWS_AS(parse_operator(json::parse(R"({"dim": 3, "entries": [[1, 0], [0, 1]]})")), ParseError);
    CHECK_THROWS_AS(parse_operator(json::parse(R"({"entries": [[1, 0], [0]]})")), ParseError);
    CHECK_THROWS_AS(parse_operator(json::parse(R"({"entries": [[1, "x"], [0, 1]]})")), ParseError);
    CHECK_THROWS_AS(parse_json("{", "inline"), ParseError);

    const json named = json::parse(R"({"A": [[1]], "B": [[2]]})");
    CHECK(select_operator(named, "B").data == std::vector<double>{2, 0});
    CHECK_THROWS_AS(select_operator(named, ""), ParseError);
    CHECK_THROWS_AS(select_operator(named, "C"), ParseError);
  }

  TEST_CASE("states") {
    const Matrix pure = parse_state(json::parse(R"({"psi": [1, [0, 1]]})"));
    REQUIRE(pure.n == 2);
    // ½[[1, −i], [i, 1]]
    CHECK(pure.data == std::vector<double>{0.5, 0, 0, -0.5, 0, 0.5, 0.5, 0});
    CHECK(parse_state(json::parse(R"({"rho": [[0.5, 0], [0, 0.5]]})")).n == 2);
    CHECK_THROWS_AS(parse_state(json::parse(R"({"psi": [0, 0]})")), ParseError);
    CHECK_THROWS_AS(parse_state(json::parse(R"({"sigma": 1})")), ParseError);
  }

  TEST_CASE("GKLS documents") {
    const auto d = parse_gkls(json::parse(R"({"H": [[0, 0], [0, 0]], "V": [[[0, 1], [0, 0]]], "rho0": [[0, 0], [0, 1]]})"));
    CHECK(d.diagonal);
    CHECK(d.ops.size() == 1);
    CHECK(d.rho0.has_value());
    const auto s = parse_gkls(json::parse(R"({"H": [[1, 0], [0, -1]], "c": [[1]], "F": [[[0, 0.5], [0.5, 0]]]})"));
    CHECK_FALSE(s.diagonal);
    CHECK(s.c.n == 1);
    CHECK_THROWS_AS(parse_gkls(json::parse(R"({"H": [[1]], "c": [[1]], "F": [], "V": []})")), ParseError);
    CHECK_THROWS_AS(parse_gkls(json::parse(R"({"H": [[1, 0], [0, 1]], "c": [[1, 0], [0, 1]], "F": [[[0, 1], [1, 0]]]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_gkls(json::parse(R"({"c": [], "F": []})")), ParseError);
  }

  TEST_CASE("number lists") {
    CHECK(parse_list("1, 0.5,-2e-3") == std::vector<double>{1, 0.5, -2e-3});
    CHECK(parse_list("4.9e-324").front() > 0.0);
    CHECK_THROWS_AS(parse_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_list("1,abc"), ParseError);
    CHECK_THROWS_AS(parse_list(""), ParseError);
    CHECK(format_double(0.1) == "0.10000000000000001");
  }

  TEST_CASE("headers and paths") {
    CHECK(trajectory_header(2) == std::vector<std::string>{"t", "q1", "p1", "q2", "p2"});
    CHECK(bloch_header(2) == std::vector<std::string>{"t", "y0", "y1", "y2", "y3"});
    const auto mh = matrix_header(2);
    CHECK(mh.size() == 9);
    CHECK(mh[1] == "rho0_0_re");
    CHECK(mh.back() == "rho1_1_im");
    CHECK(companion_path("out/fig3b.csv") == "out/fig3b_gamma.csv");
    CHECK(companion_path("data") == "data_gamma");
  }
}
