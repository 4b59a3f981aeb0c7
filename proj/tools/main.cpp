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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entroportrait/cli.hpp"

namespace {

using entroportrait::Command;
using entroportrait::OutputFormat;
using entroportrait::RunConfig;

void add_common(CLI::App *cmd, RunConfig &config, std::string &format) {
  cmd->add_option("--seed", config.seed, "base seed for every random draw")
      ->envname("ENTROPORTRAIT_SEED");
  cmd->add_option("--trials", config.trials, "ensemble size")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", config.tolerance,
                  "negativity tolerance for the inequalities")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_factorization(CLI::App *cmd, std::vector<std::size_t> &nm,
                       RunConfig &config) {
  cmd->add_option("--factorization", nm,
                  "index coding N M (default: every nontrivial one)")
      ->expected(2);
  cmd->add_flag("--include-trivial", config.include_trivial,
                "also evaluate the (1, n) coding");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Entropic subadditivity toolkit for probability vectors, "
               "qudit density matrices and their tomograms"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::vector<std::size_t> nm;
  std::string input, density;
  std::size_t random_dim = 0;

  auto *classical = app.add_subcommand(
      "classical", "Shannon subadditivity for a probability vector");
  classical->add_option("--input", input, "probability vector JSON file");
  classical->add_option("--random", random_dim, "random n-vector ensemble")
      ->check(CLI::PositiveNumber);
  add_factorization(classical, nm, config);
  add_common(classical, config, format);

  auto *quantum = app.add_subcommand(
      "quantum", "von Neumann subadditivity through the portrait maps");
  quantum->add_option("--input", input, "density matrix JSON file");
  quantum->add_option("--random", random_dim, "random state ensemble of this dim")
      ->check(CLI::PositiveNumber);
  add_factorization(quantum, nm, config);
  add_common(quantum, config, format);

  auto *tomogram = app.add_subcommand(
      "tomogram", "tomographic probability vectors and their subadditivity");
  tomogram->add_option("--input", input, "density matrix JSON file");
  tomogram->add_option("--random", random_dim, "seeded random state of this dim")
      ->check(CLI::PositiveNumber);
  add_factorization(tomogram, nm, config);
  add_common(tomogram, config, format);

  auto *channel = app.add_subcommand(
      "channel", "escort / power-channel entropy monotonicity chains");
  channel->add_option("--input", input, "probability vector JSON file");
  channel->add_option("--density", density, "density matrix JSON file");
  channel->add_option("--random", random_dim,
                      "random ensemble dimension (vectors and states)")
      ->check(CLI::PositiveNumber);
  channel->add_option("--s-max", config.s_max, "largest power in the chains")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  add_common(channel, config, format);

  auto *xsearch = app.add_subcommand(
      "xsearch", "hunt for entanglement created by the power channel on "
                 "separable two-qubit X-states");
  xsearch->add_option("--s", config.power_order, "channel exponent")
      ->check(CLI::Range(1.0, 64.0));
  add_common(xsearch, config, format);

  auto *sweep = app.add_subcommand(
      "sweep", "run every inequality suite over seeded ensembles");
  sweep->add_option("--s-max", config.s_max, "largest power in the chains")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  add_common(sweep, config, format);

  CLI11_PARSE(app, argc, argv);

  if (classical->parsed())
    config.command = Command::classical;
  else if (quantum->parsed())
    config.command = Command::quantum;
  else if (tomogram->parsed())
    config.command = Command::tomogram;
  else if (channel->parsed())
    config.command = Command::channel;
  else if (xsearch->parsed())
    config.command = Command::xsearch;
  else
    config.command = Command::sweep;

  if (!input.empty())
    config.input_path = input;
  if (!density.empty())
    config.density_path = density;
  if (random_dim > 0)
    config.random_dim = random_dim;
  if (!nm.empty())
    config.factorization = std::make_pair(nm[0], nm[1]);
  config.format = (format == "text") ? OutputFormat::text : OutputFormat::json;

  return entroportrait::run(config, std::cout, std::cerr);
}
