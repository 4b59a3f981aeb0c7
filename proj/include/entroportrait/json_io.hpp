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

#ifndef ENTROPORTRAIT_JSON_IO_HPP
#define ENTROPORTRAIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "entroportrait/density.hpp"
#include "entroportrait/prob.hpp"

namespace entroportrait {

// File schemas:
//   probability vector  {"n": <int>, "p": [<float>, ...]}
//   density matrix      {"dim": <int>, "data": [[[re, im], ...], ...]}
// (row-major, one inner list per row, complex entries as [re, im] pairs).

using Json = nlohmann::ordered_json;

ProbabilityVector parse_probability_vector(const Json &j);
ComplexMatrix parse_complex_matrix(const Json &j);

ProbabilityVector read_probability_vector(const std::string &path);
DensityMatrix read_density_matrix(const std::string &path);

Json probability_vector_json(const ProbabilityVector &p);
Json density_matrix_json(const DensityMatrix &rho);

/// Serializer used for every report: insertion-ordered objects, floats
/// written with 17 significant digits so values round-trip exactly and the
/// bytes are reproducible.
std::string dump_json(const Json &j, int indent = 2);

} // namespace entroportrait

#endif // ENTROPORTRAIT_JSON_IO_HPP
