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

#include "entroportrait/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "entroportrait/channels.hpp"
#include "entroportrait/json_io.hpp"
#include "entroportrait/kernels.hpp"
#include "entroportrait/portrait.hpp"
#include "entroportrait/rng.hpp"
#include "entroportrait/tomography.hpp"

namespace entroportrait {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json factorization_json(const Factorization &f) {
  Json j;
  j["n"] = f.n();
  j["N"] = f.first;
  j["M"] = f.second;
  return j;
}

Json classical_report_json(const SubadditivityReport &r) {
  Json j;
  j["factorization"] = factorization_json(r.factorization);
  j["H_joint"] = r.h_joint;
  j["H_first"] = r.h_first;
  j["H_second"] = r.h_second;
  j["information"] = r.information;
  return j;
}

Json quantum_report_json(const QuantumReport &r) {
  Json j;
  j["factorization"] = factorization_json(r.factorization);
  j["S_joint"] = r.s_joint;
  j["S_first"] = r.s_first;
  j["S_second"] = r.s_second;
  j["information"] = r.information;
  return j;
}

/// Factorizations to evaluate for a joint dimension n: the requested one, or
/// every nontrivial one of the (possibly padded) size.
struct Plan {
  std::size_t padded_n;
  std::vector<Factorization> factors;
};

Plan plan_factorizations(std::size_t n, const RunConfig &config) {
  if (config.factorization) {
    const Factorization f(config.factorization->first,
                          config.factorization->second);
    if (f.n() < n)
      throw Error(ErrorCode::usage_error,
                  "factorization " + std::to_string(f.first) + "x" +
                      std::to_string(f.second) + " is smaller than input size " +
                      std::to_string(n));
    return Plan{f.n(), {f}};
  }
  const std::size_t padded = next_factorable(n);
  return Plan{padded, factorizations(padded, config.include_trivial)};
}

void render_text(const Json &j, std::ostream &out, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out << pad << it.key() << ":\n";
        render_text(it.value(), out, depth + 1);
      } else {
        out << pad << it.key() << " = " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto &el : j) {
      if (el.is_object() || el.is_array()) {
        out << pad << "-\n";
        render_text(el, out, depth + 1);
      } else {
        out << pad << "- " << el.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

void emit(const Json &j, const RunConfig &config, std::ostream &out) {
  if (config.format == OutputFormat::json)
    out << dump_json(j);
  else
    render_text(j, out);
}

struct Extremes {
  double min = 0.0;
  double max = 0.0;
  double sum = 0.0;
  std::size_t count = 0;
  std::size_t violations = 0;

  void feed(double v, double tolerance) {
    if (count == 0) {
      min = max = v;
    } else {
      min = std::min(min, v);
      max = std::max(max, v);
    }
    sum += v;
    ++count;
    if (v < -tolerance)
      ++violations;
  }

  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
};

int run_classical(const RunConfig &config, std::ostream &out) {
  Json doc;
  doc["command"] = "classical";
  doc["tolerance"] = config.tolerance;
  Extremes info;

  if (config.input_path) {
    const ProbabilityVector p = read_probability_vector(*config.input_path);
    const Plan plan = plan_factorizations(p.size(), config);
    const ProbabilityVector padded = pad_to_length(p, plan.padded_n);
    doc["input"] = *config.input_path;
    doc["n"] = p.size();
    doc["padded_n"] = plan.padded_n;
    doc["seed"] = config.seed;
    Json reports = Json::array();
    for (const Factorization &f : plan.factors) {
      const SubadditivityReport r = subadditivity_report(padded, f);
      info.feed(r.information, config.tolerance);
      reports.push_back(classical_report_json(r));
    }
    doc["reports"] = std::move(reports);
  } else if (config.random_dim) {
    const std::size_t n = *config.random_dim;
    const Plan plan = plan_factorizations(n, config);
    doc["n"] = n;
    doc["padded_n"] = plan.padded_n;
    doc["seed"] = config.seed;
    doc["trials"] = config.trials;
    Json factors = Json::array();
    for (const Factorization &f : plan.factors)
      factors.push_back(factorization_json(f));
    doc["factorizations"] = std::move(factors);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const ProbabilityVector p = pad_to_length(
          random_probability_vector(n, derive_seed(config.seed, t)),
          plan.padded_n);
      for (const Factorization &f : plan.factors)
        info.feed(subadditivity_report(p, f).information, config.tolerance);
    }
  } else {
    throw Error(ErrorCode::usage_error,
                "classical needs --input FILE or --random N");
  }

  doc["min_information"] = info.min;
  doc["mean_information"] = info.mean();
  doc["violations"] = info.violations;
  emit(doc, config, out);
  return info.violations ? 2 : 0;
}

int run_quantum(const RunConfig &config, std::ostream &out) {
  Json doc;
  doc["command"] = "quantum";
  doc["tolerance"] = config.tolerance;
  Extremes info;

  if (config.input_path || config.density_path) {
    const std::string path =
        config.density_path ? *config.density_path : *config.input_path;
    const DensityMatrix rho = read_density_matrix(path);
    const Plan plan = plan_factorizations(rho.dim(), config);
    const DensityMatrix padded = embed_padded(rho, plan.padded_n);
    doc["input"] = path;
    doc["dim"] = rho.dim();
    doc["padded_dim"] = plan.padded_n;
    doc["seed"] = config.seed;
    Json reports = Json::array();
    for (const Factorization &f : plan.factors) {
      const QuantumReport r = quantum_subadditivity_report(padded, f);
      info.feed(r.information, config.tolerance);
      reports.push_back(quantum_report_json(r));
    }
    doc["reports"] = std::move(reports);
  } else if (config.random_dim) {
    const std::size_t dim = *config.random_dim;
    const Plan plan = plan_factorizations(dim, config);
    doc["dim"] = dim;
    doc["padded_dim"] = plan.padded_n;
    doc["seed"] = config.seed;
    doc["trials"] = config.trials;
    Json factors = Json::array();
    for (const Factorization &f : plan.factors)
      factors.push_back(factorization_json(f));
    doc["factorizations"] = std::move(factors);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const std::size_t rank = 1 + static_cast<std::size_t>(t % dim);
      const DensityMatrix rho = embed_padded(
          random_density(dim, rank, derive_seed(config.seed, t)),
          plan.padded_n);
      for (const Factorization &f : plan.factors)
        info.feed(quantum_subadditivity_report(rho, f).information,
                  config.tolerance);
    }
  } else {
    throw Error(ErrorCode::usage_error,
                "quantum needs --input FILE or --random DIM");
  }

  doc["min_information"] = info.min;
  doc["mean_information"] = info.mean();
  doc["violations"] = info.violations;
  emit(doc, config, out);
  return info.violations ? 2 : 0;
}

int run_tomogram(const RunConfig &config, std::ostream &out) {
  Json doc;
  doc["command"] = "tomogram";
  doc["tolerance"] = config.tolerance;

  DensityMatrix rho = [&] {
    if (config.input_path || config.density_path)
      return read_density_matrix(config.density_path ? *config.density_path
                                                     : *config.input_path);
    if (config.random_dim)
      return random_density(*config.random_dim, *config.random_dim,
                            derive_seed(config.seed, 0x7a7a));
    throw Error(ErrorCode::usage_error,
                "tomogram needs --input FILE or --random DIM");
  }();

  const Plan plan = plan_factorizations(rho.dim(), config);
  doc["dim"] = rho.dim();
  doc["padded_n"] = plan.padded_n;
  doc["seed"] = config.seed;

  Extremes info;
  Json sweeps = Json::array();
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const std::uint64_t u_seed = derive_seed(config.seed, t);
    const UnitaryMatrix u = random_unitary(rho.dim(), u_seed);
    const Tomogram tg = tomogram(rho, u);

    Json trial;
    trial["u_seed"] = u_seed;
    trial["w"] = tg.probabilities.components();
    Json rep;
    Json per_f = Json::array();
    double local_min = 0.0;
    bool first = true;
    for (const Factorization &f : plan.factors) {
      const SubadditivityReport r = tomographic_subadditivity(rho, u, f);
      info.feed(r.information, config.tolerance);
      local_min = first ? r.information : std::min(local_min, r.information);
      first = false;
      per_f.push_back(classical_report_json(r));
    }
    rep["factorizations"] = std::move(per_f);
    rep["min_information"] = local_min;
    trial["report"] = std::move(rep);
    sweeps.push_back(std::move(trial));
  }
  doc["trials"] = std::move(sweeps);
  doc["min_information"] = info.min;
  doc["violations"] = info.violations;
  emit(doc, config, out);
  return info.violations ? 2 : 0;
}

int run_channel(const RunConfig &config, std::ostream &out) {
  Json doc;
  doc["command"] = "channel";
  doc["tolerance"] = config.tolerance;
  doc["s_max"] = config.s_max;
  std::size_t violations = 0;

  auto chain_json = [&](const std::vector<double> &chain) {
    double worst_step = 0.0;
    for (std::size_t i = 1; i < chain.size(); ++i)
      worst_step = std::max(worst_step, chain[i] - chain[i - 1]);
    if (worst_step > config.tolerance)
      ++violations;
    Json j;
    j["entropies"] = chain;
    j["max_step_increase"] = worst_step;
    return j;
  };

  bool have_work = false;
  if (config.input_path) {
    const ProbabilityVector p = read_probability_vector(*config.input_path);
    doc["input"] = *config.input_path;
    doc["escort"] = chain_json(escort_entropy_chain(p, config.s_max));
    have_work = true;
  }
  if (config.density_path) {
    const DensityMatrix rho = read_density_matrix(*config.density_path);
    doc["density_input"] = *config.density_path;
    doc["quantum"] = chain_json(quantum_power_entropy_chain(rho, config.s_max));
    have_work = true;
  }
  if (config.random_dim) {
    const std::size_t n = *config.random_dim;
    doc["dim"] = n;
    doc["seed"] = config.seed;
    doc["trials"] = config.trials;
    double worst_escort = 0.0, worst_quantum = 0.0, worst_purity = 0.0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const auto chain = escort_entropy_chain(
          random_probability_vector(n, derive_seed(config.seed, t)),
          config.s_max);
      for (std::size_t i = 1; i < chain.size(); ++i)
        worst_escort = std::max(worst_escort, chain[i] - chain[i - 1]);

      const DensityMatrix rho = random_density(
          n, 1 + static_cast<std::size_t>(t % n), derive_seed(~config.seed, t));
      const auto qchain = quantum_power_entropy_chain(rho, config.s_max);
      for (std::size_t i = 1; i < qchain.size(); ++i)
        worst_quantum = std::max(worst_quantum, qchain[i] - qchain[i - 1]);

      double purity_prev = kernels::sum_squares(rho.spectrum().data(), n);
      for (std::size_t s = 2; s <= config.s_max; ++s) {
        const DensityMatrix mapped = power_channel(rho, static_cast<double>(s));
        const double purity =
            kernels::sum_squares(mapped.spectrum().data(), mapped.dim());
        worst_purity = std::max(worst_purity, purity_prev - purity);
        purity_prev = purity;
      }
    }
    if (worst_escort > config.tolerance)
      ++violations;
    if (worst_quantum > config.tolerance)
      ++violations;
    if (worst_purity > config.tolerance)
      ++violations;
    Json ens;
    ens["max_escort_step_increase"] = worst_escort;
    ens["max_quantum_step_increase"] = worst_quantum;
    ens["max_purity_step_decrease"] = worst_purity;
    doc["ensemble"] = std::move(ens);
    have_work = true;
  }
  if (!have_work)
    throw Error(ErrorCode::usage_error,
                "channel needs --input, --density or --random");

  doc["violations"] = violations;
  emit(doc, config, out);
  return violations ? 2 : 0;
}

int run_xsearch(const RunConfig &config, std::ostream &out) {
  const XSearchReport report =
      xstate_entanglement_search(config.trials, config.seed, config.power_order);
  std::size_t violations = 0;
  Json found = Json::array();
  for (const XStateHit &hit : report.found) {
    Json h;
    h["trial"] = hit.trial;
    h["min_eig_before"] = hit.min_eig_before;
    h["min_eig_after"] = hit.min_eig_after;
    if (hit.min_eig_before < -1e-10)
      ++violations; // sampler must only emit PPT states
    found.push_back(std::move(h));
  }
  Json doc;
  doc["command"] = "xsearch";
  doc["trials"] = report.trials;
  doc["seed"] = report.seed;
  doc["s"] = report.order;
  doc["hits"] = report.found.size();
  doc["found"] = std::move(found);
  doc["violations"] = violations;
  emit(doc, config, out);
  return violations ? 2 : 0;
}

int run_sweep(const RunConfig &config, std::ostream &out, std::ostream &err) {
  Json doc;
  doc["command"] = "sweep";
  doc["seed"] = config.seed;
  doc["trials"] = config.trials;
  doc["tolerance"] = config.tolerance;
  Json suites = Json::array();
  std::size_t total_violations = 0;

  {
    auto start = Clock::now();
    Extremes info;
    for (std::size_t n : {4, 6, 8, 12}) {
      for (std::uint64_t t = 0; t < config.trials; ++t) {
        const ProbabilityVector p =
            random_probability_vector(n, derive_seed(config.seed, t * 64 + n));
        for (const Factorization &f : factorizations(n))
          info.feed(subadditivity_report(p, f).information, config.tolerance);
      }
    }
    Json s;
    s["suite"] = "classical";
    s["cases"] = info.count;
    s["min_information"] = info.min;
    s["violations"] = info.violations;
    suites.push_back(std::move(s));
    total_violations += info.violations;
    err << "suite classical: " << seconds_since(start) << " s\n";
  }

  {
    auto start = Clock::now();
    Extremes info;
    for (std::size_t dim : {4, 6}) {
      for (std::uint64_t t = 0; t < config.trials; ++t) {
        const DensityMatrix rho =
            random_density(dim, 1 + static_cast<std::size_t>(t % dim),
                           derive_seed(config.seed, t * 64 + dim));
        for (const Factorization &f : factorizations(dim))
          info.feed(quantum_subadditivity_report(rho, f).information,
                    config.tolerance);
      }
    }
    Json s;
    s["suite"] = "quantum";
    s["cases"] = info.count;
    s["min_information"] = info.min;
    s["violations"] = info.violations;
    suites.push_back(std::move(s));
    total_violations += info.violations;
    err << "suite quantum: " << seconds_since(start) << " s\n";
  }

  {
    auto start = Clock::now();
    Extremes info;
    const DensityMatrix rho =
        random_density(6, 6, derive_seed(config.seed, 0x70a0));
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const UnitaryMatrix u = random_unitary(6, derive_seed(config.seed, t));
      for (const Factorization &f : factorizations(6))
        info.feed(tomographic_subadditivity(rho, u, f).information,
                  config.tolerance);
    }
    Json s;
    s["suite"] = "tomographic";
    s["cases"] = info.count;
    s["min_information"] = info.min;
    s["violations"] = info.violations;
    suites.push_back(std::move(s));
    total_violations += info.violations;
    err << "suite tomographic: " << seconds_since(start) << " s\n";
  }

  {
    auto start = Clock::now();
    double worst_escort = 0.0, worst_quantum = 0.0, worst_purity = 0.0;
    std::size_t cases = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const auto chain = escort_entropy_chain(
          random_probability_vector(6, derive_seed(config.seed, t)),
          config.s_max);
      for (std::size_t i = 1; i < chain.size(); ++i)
        worst_escort = std::max(worst_escort, chain[i] - chain[i - 1]);

      const DensityMatrix rho = random_density(
          6, 1 + static_cast<std::size_t>(t % 6), derive_seed(~config.seed, t));
      const auto qchain = quantum_power_entropy_chain(rho, config.s_max);
      for (std::size_t i = 1; i < qchain.size(); ++i)
        worst_quantum = std::max(worst_quantum, qchain[i] - qchain[i - 1]);

      double purity_prev = kernels::sum_squares(rho.spectrum().data(), 6);
      for (std::size_t s = 2; s <= config.s_max; ++s) {
        const DensityMatrix mapped = power_channel(rho, static_cast<double>(s));
        const double purity =
            kernels::sum_squares(mapped.spectrum().data(), mapped.dim());
        worst_purity = std::max(worst_purity, purity_prev - purity);
        purity_prev = purity;
      }
      cases += 1;
    }
    std::size_t violations = 0;
    if (worst_escort > config.tolerance)
      ++violations;
    if (worst_quantum > config.tolerance)
      ++violations;
    if (worst_purity > config.tolerance)
      ++violations;
    Json s;
    s["suite"] = "channels";
    s["cases"] = cases;
    s["max_escort_step_increase"] = worst_escort;
    s["max_quantum_step_increase"] = worst_quantum;
    s["max_purity_step_decrease"] = worst_purity;
    s["violations"] = violations;
    suites.push_back(std::move(s));
    total_violations += violations;
    err << "suite channels: " << seconds_since(start) << " s\n";
  }

  doc["suites"] = std::move(suites);
  doc["violations"] = total_violations;
  emit(doc, config, out);
  return total_violations ? 2 : 0;
}

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  try {
    switch (config.command) {
    case Command::classical:
      return run_classical(config, out);
    case Command::quantum:
      return run_quantum(config, out);
    case Command::tomogram:
      return run_tomogram(config, out);
    case Command::channel:
      return run_channel(config, out);
    case Command::xsearch:
      return run_xsearch(config, out);
    case Command::sweep:
      return run_sweep(config, out, err);
    }
    err << "error: unknown command\n";
    return 1;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error &e) {
    err << "internal inequality violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace entroportrait
