// Copyright 2026 The entroportrait authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entroportrait/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace entroportrait {

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
  throw Error(ErrorCode::parse_error, what);
}

Json load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    parse_fail("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    parse_fail("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

std::string format_double(double v) {
  if (!std::isfinite(v))
    parse_fail("cannot serialize non-finite float");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // Keep a float marker so the value parses back as a float, not an int.
  if (s.find_first_of(".eE") == std::string::npos)
    s += ".0";
  return s;
}

void dump_rec(const Json &j, std::string &out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
  case Json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first)
        out += ",\n";
      first = false;
      out += pad_in + Json(it.key()).dump() + ": ";
      dump_rec(it.value(), out, indent, depth + 1);
    }
    out += "\n" + pad + "}";
    return;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto &el : j) {
      if (!first)
        out += ",\n";
      first = false;
      out += pad_in;
      dump_rec(el, out, indent, depth + 1);
    }
    out += "\n" + pad + "]";
    return;
  }
  case Json::value_t::number_float:
    out += format_double(j.get<double>());
    return;
  default:
    out += j.dump();
    return;
  }
}

} // namespace

ProbabilityVector parse_probability_vector(const Json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("p"))
    parse_fail("probability vector needs fields \"n\" and \"p\"");
  if (!j["n"].is_number_integer())
    parse_fail("field \"n\" must be an integer");
  if (!j["p"].is_array())
    parse_fail("field \"p\" must be an array of floats");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1)
    parse_fail("field \"n\" must be positive");
  if (j["p"].size() != static_cast<std::size_t>(n))
    parse_fail("\"p\" has " + std::to_string(j["p"].size()) +
               " entries, expected n = " + std::to_string(n));
  std::vector<double> p;
  p.reserve(j["p"].size());
  for (const auto &v : j["p"]) {
    if (!v.is_number())
      parse_fail("\"p\" entries must be numbers");
    p.push_back(v.get<double>());
  }
  return ProbabilityVector(std::move(p));
}

ComplexMatrix parse_complex_matrix(const Json &j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data"))
    parse_fail("matrix needs fields \"dim\" and \"data\"");
  if (!j["dim"].is_number_integer())
    parse_fail("field \"dim\" must be an integer");
  const auto dim_signed = j["dim"].get<std::int64_t>();
  if (dim_signed < 1)
    parse_fail("field \"dim\" must be positive");
  const auto dim = static_cast<std::size_t>(dim_signed);
  const Json &rows = j["data"];
  if (!rows.is_array() || rows.size() != dim)
    parse_fail("\"data\" must hold " + std::to_string(dim) + " rows");
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto &row : rows) {
    if (!row.is_array() || row.size() != dim)
      parse_fail("each row must hold " + std::to_string(dim) + " entries");
    for (const auto &cell : row) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        parse_fail("matrix entries must be [re, im] pairs");
      entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return ComplexMatrix(dim, dim, std::move(entries));
}

ProbabilityVector read_probability_vector(const std::string &path) {
  return parse_probability_vector(load_file(path));
}

DensityMatrix read_density_matrix(const std::string &path) {
  return DensityMatrix(parse_complex_matrix(load_file(path)));
}

Json probability_vector_json(const ProbabilityVector &p) {
  Json j;
  j["n"] = p.size();
  j["p"] = p.components();
  return j;
}

Json density_matrix_json(const DensityMatrix &rho) {
  Json j;
  j["dim"] = rho.dim();
  Json rows = Json::array();
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < rho.dim(); ++k) {
      const Complex &z = rho.matrix()(i, k);
      row.push_back(Json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  j["data"] = std::move(rows);
  return j;
}

std::string dump_json(const Json &j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

} // namespace entroportrait
