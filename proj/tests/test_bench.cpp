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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "mecprice/bench.hpp"
#include "mecprice/config.hpp"
#include "test_util.hpp"

namespace mecprice {
namespace {

using testing::near_rel;
using testing::two_user_instance;

TEST(RunTrial, HandInstance) {
  const auto h = two_user_instance();
  // Local only: 0.8 s and 1.6 s.
  const TrialResult local = run_trial(h.scenario, h.kinetics, Scheme::LocalOnly);
  EXPECT_TRUE(near_rel(local.avg_latency_s, 1.2, 1e-12));
  EXPECT_EQ(local.revenue_s, 0.0);
  // Both offload their balance points: 0.4 s and 1.0 s.
  const TrialResult uni = run_trial(h.scenario, h.kinetics, Scheme::Uniform);
  EXPECT_TRUE(near_rel(uni.avg_latency_s, 0.7, 1e-12));
  EXPECT_TRUE(near_rel(uni.revenue_s, 0.7, 1e-12));
  const TrialResult diff = run_trial(h.scenario, h.kinetics, Scheme::Differentiated);
  EXPECT_TRUE(near_rel(diff.revenue_s, 1.0, 1e-12));
}

TEST(Schemes, NamesRoundTrip) {
  for (Scheme s : kAllSchemes) EXPECT_EQ(parse_scheme(to_string(s)), s);
  EXPECT_THROW(parse_scheme("greedy"), std::invalid_argument);
  EXPECT_EQ(parse_sweep_param("num_users"), SweepParam::NumUsers);
  EXPECT_THROW(parse_sweep_param("bandwidth"), std::invalid_argument);
}

SweepSpec small_sweep() {
  SweepSpec spec;
  spec.values = {2e9, 4e9, 6e9};
  spec.trials = 1;
  return spec;
}

TEST(RunSweep, LayoutAndSeeds) {
  const auto r = run_sweep(small_sweep());
  ASSERT_EQ(r.size(), 9u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_EQ(r[i].scheme, kAllSchemes[i % 3]);
    EXPECT_EQ(r[i].sweep_param, "capacity");
    EXPECT_EQ(r[i].sweep_value, small_sweep().values[i / 3]);
    EXPECT_EQ(r[i].seed, trial_seed(1, i / 3, 0));
  }
  EXPECT_EQ(trial_seed(5, 2, 7), 2000012u);
}

TEST(RunSweep, RejectsBadSpecs) {
  SweepSpec spec = small_sweep();
  spec.trials = 0;
  EXPECT_THROW(run_sweep(spec), std::invalid_argument);
  spec = small_sweep();
  spec.values.clear();
  EXPECT_THROW(run_sweep(spec), std::invalid_argument);
  spec = small_sweep();
  spec.param = SweepParam::NumUsers;
  spec.values = {10.5};
  EXPECT_THROW(run_sweep(spec), std::invalid_argument);
}

TEST(RunSweep, UserCountSweep) {
  SweepSpec spec;
  spec.param = SweepParam::NumUsers;
  spec.values = {5, 10};
  spec.trials = 2;
  const auto r = run_sweep(spec);
  ASSERT_EQ(r.size(), 12u);
  EXPECT_EQ(r.back().sweep_param, "num_users");
}

TEST(RunSweep, Deterministic) {
  std::ostringstream a, b;
  write_csv(run_sweep(small_sweep()), a);
  write_csv(run_sweep(small_sweep()), b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Csv, HeaderAndRoundTrip) {
  std::ostringstream empty;
  write_csv({}, empty);
  EXPECT_EQ(empty.str(), std::string(kCsvHeader) + "\n");

  const auto r = run_sweep(small_sweep());
  std::ostringstream os;
  write_csv(r, os);
  const std::string text = os.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  std::istringstream is(text);
  EXPECT_EQ(read_csv(is), r);

  std::istringstream bad("scheme,x\n");
  EXPECT_THROW(read_csv(bad), std::runtime_error);
}

TEST(Summarize, AveragesPerPoint) {
  std::vector<TrialResult> r = {
      {Scheme::Uniform, "capacity", 1.0, 1, 2.0, 4.0},
      {Scheme::Uniform, "capacity", 1.0, 2, 4.0, 8.0},
      {Scheme::LocalOnly, "capacity", 1.0, 1, 9.0, 0.0},
      {Scheme::Uniform, "capacity", 2.0, 3, 1.0, 1.0},
  };
  const auto s = summarize(r, Scheme::Uniform);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].mean_latency_s, 3.0);
  EXPECT_EQ(s[0].mean_revenue_s, 6.0);
  EXPECT_EQ(s[0].trials, 2u);
  EXPECT_EQ(s[1].sweep_value, 2.0);
}

TEST(Config, SweepKeys) {
  std::istringstream is("sweep_param = num_users\nsweep_values = 10, 20 ,30\ntrials = 5\nseed = 9\nquantum=2e6\n");
  const RunConfig rc = parse_config(is);
  EXPECT_EQ(rc.sweep.param, SweepParam::NumUsers);
  EXPECT_EQ(rc.sweep.values, (std::vector<double>{10, 20, 30}));
  EXPECT_EQ(rc.sweep.trials, 5u);
  EXPECT_EQ(rc.sweep.base.seed, 9u);
  EXPECT_EQ(rc.sweep.quantum, 2e6);
}

TEST(WriteOutcome, Format) {
  const auto h = two_user_instance();
  std::ostringstream os;
  write_outcome(solve_uniform(h.scenario, h.kinetics), Scheme::Uniform, os);
  const std::string text = os.str();
  EXPECT_EQ(text.rfind("scheme uniform\nfeasible true\n", 0), 0u);
  EXPECT_NE(text.find("\n0,1.0000000000000001e-09,1,400000,"), std::string::npos);
}

}  // namespace
}  // namespace mecprice
