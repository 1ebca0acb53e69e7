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

#include "mecprice/checks.hpp"
#include "mecprice/uniform_pricing.hpp"
#include "test_util.hpp"

namespace mecprice {
namespace {

using testing::near_rel;
using testing::two_user_instance;

TEST(CandidatePrices, ReciprocalsSortedAndDeduplicated) {
  const auto h = two_user_instance();
  const auto c = candidate_prices(h.scenario);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_DOUBLE_EQ(c[0], 1e-9);
  EXPECT_DOUBLE_EQ(c[1], 2e-9);

  Scenario dup = h.scenario;
  dup.users[1].local_cpu_cps = dup.users[0].local_cpu_cps;
  EXPECT_EQ(candidate_prices(dup).size(), 1u);
}

TEST(CandidatePrices, DefaultSamplerHasAtMostTenDistinct) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_LE(candidate_prices(testing::default_scenario(seed)).size(), 10u);
  }
}

TEST(EvaluatePrice, HandInstance) {
  const auto h = two_user_instance();
  const PriceOutcome both = evaluate_price(h.scenario, h.kinetics, 1e-9);
  EXPECT_TRUE(both.feasible);
  EXPECT_TRUE(both.decisions[0].offload_flag && both.decisions[1].offload_flag);
  EXPECT_TRUE(near_rel(both.total_load_cycles, 7e8, 1e-12));
  EXPECT_TRUE(near_rel(both.revenue_s, 0.7, 1e-12));

  const PriceOutcome one = evaluate_price(h.scenario, h.kinetics, 2e-9);
  EXPECT_FALSE(one.decisions[0].offload_flag);
  EXPECT_TRUE(one.decisions[1].offload_flag);
  EXPECT_TRUE(near_rel(one.revenue_s, 0.6, 1e-12));

  const PriceOutcome none = evaluate_price(h.scenario, h.kinetics, 3e-9);
  EXPECT_EQ(none.total_load_cycles, 0.0);
  EXPECT_EQ(none.revenue_s, 0.0);
}

TEST(EvaluatePrice, OverCapacityEarnsNothing) {
  const auto h = two_user_instance(5e8);
  const PriceOutcome o = evaluate_price(h.scenario, h.kinetics, 1e-9);
  EXPECT_FALSE(o.feasible);
  EXPECT_EQ(o.revenue_s, 0.0);
  EXPECT_THROW(evaluate_price(h.scenario, h.kinetics, -1.0), std::invalid_argument);
}

TEST(SolveUniform, HandInstance) {
  const auto h = two_user_instance();
  const PriceOutcome o = solve_uniform(h.scenario, h.kinetics);
  EXPECT_EQ(o.prices[0], 1.0 / 1e9);
  EXPECT_TRUE(near_rel(o.revenue_s, 0.7, 1e-12));
  // Tighter capacity: only the slow user fits.
  const auto tight = two_user_instance(5e8);
  const PriceOutcome t = solve_uniform(tight.scenario, tight.kinetics);
  EXPECT_EQ(t.prices[0], 1.0 / 0.5e9);
  EXPECT_TRUE(near_rel(t.revenue_s, 0.6, 1e-12));
}

TEST(SolveUniform, NothingFitsGivesSentinel) {
  const auto h = two_user_instance(1e8);
  const PriceOutcome o = solve_uniform(h.scenario, h.kinetics);
  EXPECT_TRUE(o.offloads_nothing());
  EXPECT_EQ(o.revenue_s, 0.0);
  EXPECT_EQ(o.total_load_cycles, 0.0);
  for (double p : o.prices) {
    EXPECT_TRUE(is_no_offload_price(p));
    EXPECT_GT(p, 1.0 / 0.5e9);
  }
}

TEST(SolveUniform, SingleUser) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ScenarioConfig c;
    c.seed = seed;
    c.num_users = 1;
    c.capacity_cycles = 1e11;
    const Scenario s = sample_scenario(c);
    const auto kin = compute_all_kinetics(s);
    const PriceOutcome o = solve_uniform(s, kin);
    const UserProfile& u = s.users[0];
    EXPECT_EQ(o.prices[0], 1.0 / u.local_cpu_cps);
    EXPECT_TRUE(near_rel(o.revenue_s, kin[0].balance_bits * u.cycles_per_bit / u.local_cpu_cps, 1e-12));
  }
}

TEST(SolveUniform, RevenueTieKeepsHigherPrice) {
  // Revenue at 1/F1 equals revenue at 1/F2 when m1 C1 = m2 C2 and F2 = F1/2:
  //   (m1C1 + m2C2)/F1 == m2C2 * 2/F1.
  auto h = two_user_instance();
  h.kinetics[1] = testing::kinetics_with_balance(h.scenario.users[1], 4e5, h.scenario.system.cloud_share_cps());
  const PriceOutcome o = solve_uniform(h.scenario, h.kinetics);
  EXPECT_EQ(o.prices[0], 1.0 / 0.5e9);
}

TEST(SolveUniform, Properties) {
  detail::PortableStream rng(99);
  for (int i = 0; i < 300; ++i) {
    const Scenario s = checks::detail::random_scenario(rng, 1, 40);
    const auto kin = compute_all_kinetics(s);
    const PriceOutcome o = solve_uniform(s, kin);
    // Feasible whenever it earns anything, revenue equals the payments.
    if (o.revenue_s > 0.0) {
      EXPECT_LE(o.total_load_cycles, s.system.cloud_capacity_cycles);
    }
    double payments = 0.0;
    for (std::size_t k = 0; k < s.users.size(); ++k) {
      payments += payment(o.prices[k], o.decisions[k].offloaded_bits, s.users[k].cycles_per_bit);
    }
    EXPECT_TRUE(o.revenue_s == payments || near_rel(o.revenue_s, payments, 1e-12));
    // Offered load never rises with the price.
    const auto cands = candidate_prices(s);
    double prev = INFINITY;
    for (double p : cands) {
      const double load = evaluate_price(s, kin, p).total_load_cycles;
      if (p != cands.front()) {
        EXPECT_LE(load, prev);
      }
      prev = load;
    }
    // Early exit == exhaustive.
    EXPECT_EQ(o, checks::detail::exhaustive_uniform(s, kin));
  }
}

TEST(SolveUniform, DensePriceGridNeverWins) {
  detail::PortableStream rng(5);
  for (int i = 0; i < 50; ++i) {
    const Scenario s = checks::detail::random_scenario(rng, 1, 12);
    const auto kin = compute_all_kinetics(s);
    const double best = solve_uniform(s, kin).revenue_s;
    const double top = 2.0 * candidate_prices(s).back();
    for (int g = 1; g <= 2000; ++g) {
      ASSERT_LE(evaluate_price(s, kin, top * g / 2000.0).revenue_s, best * (1.0 + 1e-9));
    }
  }
}

}  // namespace
}  // namespace mecprice
