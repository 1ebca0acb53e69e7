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

#ifndef MECPRICE_BENCH_HPP
#define MECPRICE_BENCH_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mecprice/differentiated_pricing.hpp"
#include "mecprice/scenario.hpp"
#include "mecprice/uniform_pricing.hpp"

namespace mecprice {

enum class Scheme { Uniform, Differentiated, LocalOnly };

inline constexpr Scheme kAllSchemes[] = {Scheme::Uniform, Scheme::Differentiated, Scheme::LocalOnly};

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::Uniform:
      return "uniform";
    case Scheme::Differentiated:
      return "differentiated";
    case Scheme::LocalOnly:
      return "local_only";
  }
  return "?";
}

inline Scheme parse_scheme(const std::string& name) {
  for (Scheme s : kAllSchemes) {
    if (name == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown scheme '" + name + "' (expected uniform, differentiated or local_only)");
}

enum class SweepParam { Capacity, NumUsers };

inline const char* to_string(SweepParam p) { return p == SweepParam::Capacity ? "capacity" : "num_users"; }

inline SweepParam parse_sweep_param(const std::string& name) {
  if (name == "capacity") return SweepParam::Capacity;
  if (name == "num_users") return SweepParam::NumUsers;
  throw std::invalid_argument("unknown sweep parameter '" + name + "' (expected capacity or num_users)");
}

struct TrialResult {
  Scheme scheme = Scheme::LocalOnly;
  std::string sweep_param;  // empty for a standalone trial
  double sweep_value = 0.0;
  std::uint64_t seed = 0;
  double avg_latency_s = 0.0;  // mean over users of t_k at the equilibrium
  double revenue_s = 0.0;

  bool operator==(const TrialResult&) const = default;
};

struct SweepSpec {
  SweepParam param = SweepParam::Capacity;
  std::vector<double> values;
  std::size_t trials = 200;
  ScenarioConfig base;
  double quantum = 1e6;
};

inline PriceOutcome solve_scheme(const Scenario& s, const std::vector<UserKinetics>& kin, Scheme scheme,
                                 double quantum = 1e6) {
  switch (scheme) {
    case Scheme::Uniform:
      return solve_uniform(s, kin);
    case Scheme::Differentiated:
      return solve_differentiated(s, kin, DifferentiatedOptions{quantum});
    case Scheme::LocalOnly:
      return no_offload_outcome(s, kin);
  }
  throw std::logic_error("unhandled scheme");
}

inline double mean_latency(const PriceOutcome& out) {
  double sum = 0.0;
  for (const auto& d : out.decisions) sum += d.latency_s;
  return out.decisions.empty() ? 0.0 : sum / static_cast<double>(out.decisions.size());
}

inline TrialResult run_trial(const Scenario& s, const std::vector<UserKinetics>& kin, Scheme scheme,
                             double quantum = 1e6) {
  const PriceOutcome out = solve_scheme(s, kin, scheme, quantum);
  TrialResult r;
  r.scheme = scheme;
  r.avg_latency_s = mean_latency(out);
  r.revenue_s = out.revenue_s;
  return r;
}

inline TrialResult run_trial(const Scenario& s, Scheme scheme, double quantum = 1e6) {
  return run_trial(s, compute_all_kinetics(s), scheme, quantum);
}

inline std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t point, std::size_t trial) {
  return base_seed + static_cast<std::uint64_t>(point) * 1000000u + static_cast<std::uint64_t>(trial);
}

inline void validate_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw std::invalid_argument("sweep needs at least one value");
  if (spec.trials < 1) throw std::invalid_argument("sweep needs trials >= 1");
  if (!(spec.quantum > 0.0)) throw std::invalid_argument("sweep quantum must be > 0");
  for (double v : spec.values) {
    if (!(v > 0.0)) throw std::invalid_argument("sweep values must be > 0");
    if (spec.param == SweepParam::NumUsers && v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw std::invalid_argument("num_users sweep values must be integers");
    }
  }
  validate_config(spec.base);
}

inline ScenarioConfig sweep_point_config(const SweepSpec& spec, std::size_t point, std::size_t trial) {
  ScenarioConfig c = spec.base;
  if (spec.param == SweepParam::Capacity) {
    c.capacity_cycles = spec.values[point];
  } else {
    c.num_users = static_cast<std::size_t>(spec.values[point]);
  }
  c.seed = trial_seed(spec.base.seed, point, trial);
  return c;
}

// Results are ordered by (point, trial, scheme) with schemes in kAllSchemes
// order; every scheme in a trial sees the same scenario.
inline std::vector<TrialResult> run_sweep(const SweepSpec& spec) {
  validate_sweep(spec);
  std::vector<TrialResult> out;
  out.reserve(spec.values.size() * spec.trials * 3);
  for (std::size_t p = 0; p < spec.values.size(); ++p) {
    for (std::size_t t = 0; t < spec.trials; ++t) {
      const ScenarioConfig cfg = sweep_point_config(spec, p, t);
      const Scenario s = sample_scenario(cfg);
      const std::vector<UserKinetics> kin = compute_all_kinetics(s);
      for (Scheme scheme : kAllSchemes) {
        TrialResult r = run_trial(s, kin, scheme, spec.quantum);
        r.sweep_param = to_string(spec.param);
        r.sweep_value = spec.values[p];
        r.seed = cfg.seed;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

inline constexpr const char* kCsvHeader = "scheme,sweep_param,sweep_value,seed,avg_latency_s,revenue_s";

namespace detail {

inline std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

inline void write_csv(const std::vector<TrialResult>& results, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const auto& r : results) {
    os << to_string(r.scheme) << ',' << r.sweep_param << ',' << detail::g17(r.sweep_value) << ',' << r.seed << ','
       << detail::g17(r.avg_latency_s) << ',' << detail::g17(r.revenue_s) << '\n';
  }
}

inline void write_csv(const std::vector<TrialResult>& results, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(results, f);
  f.flush();
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

inline std::vector<TrialResult> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw std::runtime_error("missing or unexpected CSV header");
  std::vector<TrialResult> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cols.push_back(cell);
    if (cols.size() != 6) throw std::runtime_error("CSV line " + std::to_string(lineno) + ": expected 6 columns");
    try {
      TrialResult r;
      r.scheme = parse_scheme(cols[0]);
      r.sweep_param = cols[1];
      r.sweep_value = std::stod(cols[2]);
      r.seed = std::stoull(cols[3]);
      r.avg_latency_s = std::stod(cols[4]);
      r.revenue_s = std::stod(cols[5]);
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error("CSV line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// Human-readable dump of one solved scenario, used by `mecprice run`.
inline void write_outcome(const PriceOutcome& out, Scheme scheme, std::ostream& os) {
  os << "scheme " << to_string(scheme) << '\n'
     << "feasible " << (out.feasible ? "true" : "false") << '\n'
     << "total_load_cycles " << detail::g17(out.total_load_cycles) << '\n'
     << "revenue_s " << detail::g17(out.revenue_s) << '\n'
     << "avg_latency_s " << detail::g17(mean_latency(out)) << '\n'
     << "user,price_s_per_cycle,offload,offloaded_bits,latency_s,payment_s,cost_s\n";
  for (std::size_t k = 0; k < out.decisions.size(); ++k) {
    const OffloadDecision& d = out.decisions[k];
    os << d.user_index << ',' << detail::g17(out.prices[k]) << ',' << (d.offload_flag ? 1 : 0) << ','
       << detail::g17(d.offloaded_bits) << ',' << detail::g17(d.latency_s) << ',' << detail::g17(d.payment_s) << ','
       << detail::g17(d.cost_s) << '\n';
  }
}

// Mean latency and revenue per (scheme, sweep value), in sweep-value order.
struct PointSummary {
  double sweep_value = 0.0;
  double mean_latency_s = 0.0;
  double mean_revenue_s = 0.0;
  std::size_t trials = 0;
};

inline std::vector<PointSummary> summarize(const std::vector<TrialResult>& results, Scheme scheme) {
  std::map<double, PointSummary> acc;
  for (const auto& r : results) {
    if (r.scheme != scheme) continue;
    PointSummary& p = acc[r.sweep_value];
    p.sweep_value = r.sweep_value;
    p.mean_latency_s += r.avg_latency_s;
    p.mean_revenue_s += r.revenue_s;
    ++p.trials;
  }
  std::vector<PointSummary> out;
  for (auto& [v, p] : acc) {
    p.mean_latency_s /= static_cast<double>(p.trials);
    p.mean_revenue_s /= static_cast<double>(p.trials);
    out.push_back(p);
  }
  return out;
}

}  // namespace mecprice

#endif  // MECPRICE_BENCH_HPP
