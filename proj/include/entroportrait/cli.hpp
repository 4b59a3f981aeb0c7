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

#ifndef ENTROPORTRAIT_CLI_HPP
#define ENTROPORTRAIT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace entroportrait {

enum class Command { classical, quantum, tomogram, channel, xsearch, sweep };
enum class OutputFormat { json, text };

struct RunConfig {
  Command command = Command::sweep;
  std::optional<std::string> input_path;   // prob vector (classical/channel)
  std::optional<std::string> density_path; // density matrix (quantum/tomogram/channel)
  std::optional<std::size_t> random_dim;   // seeded ensemble instead of a file
  std::optional<std::pair<std::size_t, std::size_t>> factorization;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  double tolerance = 1e-9;
  std::size_t s_max = 10;      // channel chains
  double power_order = 2.0;    // xsearch exponent
  bool include_trivial = false; // admit the (1, n) factorization
  OutputFormat format = OutputFormat::json;
};

/// Executes one verification run. Reports go to `out` (a single JSON
/// document, or plain text with --format text), diagnostics to `err`.
/// Exit status: 0 all inequalities hold within tolerance, 1 input/usage
/// error, 2 violation beyond tolerance (an implementation bug, not physics).
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace entroportrait

#endif // ENTROPORTRAIT_CLI_HPP
