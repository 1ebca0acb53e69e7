// Copyright 2026 The mecprice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mecprice: solve, sweep, trace and verify edge-cloud offloading prices.
//
//   mecprice run    --config cfg --scheme differentiated
//   mecprice sweep  --config sweep.cfg --out results.csv
//   mecprice trace  --config cfg --out trace.log
//   mecprice verify --trials 100

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mecprice/mecprice.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::optional<double> quantum;
};

mecprice::RunConfig load(const CommonOptions& o) {
  mecprice::RunConfig rc;
  if (!o.config_path.empty()) {
    rc = mecprice::load_config(o.config_path);
  } else {
    rc.sweep.base = rc.scenario;
  }
  if (o.seed) {
    rc.scenario.seed = *o.seed;
    rc.sweep.base.seed = *o.seed;
  }
  if (o.quantum) rc.sweep.quantum = *o.quantum;
  return rc;
}

// Writes to --out when given, stdout otherwise.
void emit(const CommonOptions& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + o.out_path + "' for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("failed writing '" + o.out_path + "'");
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_path, "key = value configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "override the scenario seed");
  cmd->add_option("--out", o.out_path, "output file (default: stdout)");
  cmd->add_option("--quantum", o.quantum, "knapsack weight quantum in cycles")->check(CLI::PositiveNumber);
}

int run_verify(std::uint64_t seed, std::size_t n) {
  namespace ck = mecprice::checks;
  std::vector<ck::CheckResult> results = {
      ck::follower_oracle(n, 100000, seed),
      ck::uniform_price_grid(n, 12, 10000, seed + 1),
      ck::bargaining_equivalence(n, seed + 2),
      ck::knapsack_exactness(n, seed + 3),
      ck::revenue_dominance(n, seed + 4),
      ck::cost_model(10 * n, seed + 5),
  };
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    if (!r.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stackelberg pricing of edge-cloud computation offloading"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string scheme_name = "uniform";
  std::optional<std::size_t> trials;

  CLI::App* run = app.add_subcommand("run", "solve one scenario with one scheme and print the outcome");
  add_common(run, opts);
  run->add_option("--scheme", scheme_name, "uniform | differentiated | local_only");

  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over capacity or user count, CSV output");
  add_common(sweep, opts);
  sweep->add_option("--trials", trials, "trials per sweep point")->check(CLI::PositiveNumber);

  CLI::App* trace = app.add_subcommand("trace", "replay uniform-price bargaining and write the message log");
  add_common(trace, opts);

  CLI::App* verify = app.add_subcommand("verify", "run the oracle and property suites on random seeds");
  std::uint64_t verify_seed = 2024;
  std::size_t verify_n = 100;
  verify->add_option("--seed", verify_seed, "base seed for the random suites");
  verify->add_option("--trials", verify_n, "samples per suite")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const mecprice::RunConfig rc = load(opts);
      const mecprice::Scheme scheme = mecprice::parse_scheme(scheme_name);
      const mecprice::Scenario s = mecprice::sample_scenario(rc.scenario);
      const auto kin = mecprice::compute_all_kinetics(s);
      std::ostringstream os;
      mecprice::write_outcome(mecprice::solve_scheme(s, kin, scheme, rc.sweep.quantum), scheme, os);
      emit(opts, os.str());
    } else if (*sweep) {
      mecprice::RunConfig rc = load(opts);
      if (trials) rc.sweep.trials = *trials;
      if (rc.sweep.values.empty()) throw std::invalid_argument("sweep needs sweep_values in the config file");
      std::ostringstream os;
      mecprice::write_csv(mecprice::run_sweep(rc.sweep), os);
      emit(opts, os.str());
    } else if (*trace) {
      const mecprice::RunConfig rc = load(opts);
      const auto t = mecprice::protocol::run_bargaining(mecprice::sample_scenario(rc.scenario));
      emit(opts, mecprice::protocol::trace_log(t));
    } else if (*verify) {
      return run_verify(verify_seed, verify_n);
    }
  } catch (const std::exception& e) {
    std::cerr << "mecprice: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
