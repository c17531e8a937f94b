// Copyright 2026 The Fairgame Authors
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

#include "fairgame/equilibrium.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fairgame/applications.h"
#include "fairgame/catalog.h"
#include "fairgame/errors.h"
#include "testing.h"

namespace fairgame {
namespace {

using testing::AllProfiles;
using testing::MaxAbsDiff;

// Brute-force Nash predicate on the payoff tensor.
bool OracleNash(const Game& g, const Profile& x) {
  const Economy& e = g.economy();
  for (int i = 0; i < e.num_agents(); ++i) {
    for (int a = 0; a < e.num_actions(i); ++a) {
      Profile y = x;
      y[i] = a;
      if (g.payoff(i, y) > g.payoff(i, x) + kTolerance) return false;
    }
  }
  return true;
}

TEST(GameTest, TwoByThreeTensor) {
  const Game g = build_game(catalog::two_by_three(), PayScheme::MakeShapley());
  EXPECT_LE(MaxAbsDiff(g.payoffs(Profile{1, 1}), {0.5, 3.5}), 1e-9);
  EXPECT_TRUE(g.scheme_generated());
}

TEST(GameTest, ZeroSurplusGivesZeroTensor) {
  const Economy e = Economy::Anonymous({3, 2}, {0, 0},
                                       std::vector<double>(6, 0.0));
  const Game g = build_game(e, PayScheme::MakeShapley());
  for (const Profile& x : AllProfiles(e)) {
    EXPECT_EQ(g.payoffs(x), (Payoffs{0, 0}));
  }
  for (double phi : exact_potential(g)) EXPECT_EQ(phi, 0.0);
}

TEST(GameTest, CostValidation) {
  const Economy e = catalog::two_by_three();
  EXPECT_THROW(build_game(e, PayScheme::MakeShapley(), ActionCosts{{1, 0}, {0, 0, 0}}),
               InvalidArgument);
  EXPECT_THROW(build_game(e, PayScheme::MakeShapley(), ActionCosts{{0, -1}, {0, 0, 0}}),
               InvalidArgument);
  EXPECT_THROW(build_game(e, PayScheme::MakeShapley(), ActionCosts{{0, 1}}),
               InvalidArgument);
  const Game g = build_game(e, PayScheme::MakeShapley(), ActionCosts{{0, 1}, {0, 2, 0}});
  EXPECT_LE(MaxAbsDiff(g.payoffs(Profile{1, 1}), {-0.5, 1.5}), 1e-9);
}

TEST(GameTest, SizeCap) {
  const Economy e = catalog::dominated_equilibrium();
  EXPECT_THROW(build_game(e, PayScheme::MakeShapley(), std::nullopt, 5.0),
               SizeCapExceeded);
}

TEST(GameTest, TeamworkNetTensor) {
  const Game g = build_teamwork_economy(teamwork_bonus(), teamwork_costs());
  EXPECT_LE(MaxAbsDiff(g.payoffs(Profile{3, 2}), {4.5, 1.5}), 1e-9);
  EXPECT_LE(MaxAbsDiff(g.payoffs(Profile{0, 3}), {0, 8}), 1e-9);
  EXPECT_LE(MaxAbsDiff(g.payoffs(Profile{2, 2}), {-1.5, -5.5}), 1e-9);
}

TEST(NashTest, PaperExamples) {
  const Game fair = build_game(catalog::two_by_three(), PayScheme::MakeShapley());
  EXPECT_EQ(pure_nash(fair), (std::vector<Profile>{{1, 1}, {1, 2}}));
  const Game unfair = build_game(catalog::two_by_three(),
                                 PayScheme::MakeCustom(catalog::two_by_three_unfair()));
  EXPECT_TRUE(pure_nash(unfair).empty());
  const Game table4 = build_game(catalog::dominated_equilibrium(), PayScheme::MakeShapley());
  EXPECT_EQ(pure_nash(table4), (std::vector<Profile>{{1, 2}}));
  EXPECT_EQ(pure_nash(catalog::prisoners_dilemma()), (std::vector<Profile>{{1, 1}}));
}

TEST(PotentialTest, TwoByThreeStep) {
  const Game g = build_game(catalog::two_by_three(), PayScheme::MakeShapley());
  const Economy& e = g.economy();
  const std::vector<double> phi = exact_potential(g);
  EXPECT_NEAR(phi[e.index_of({1, 1})] - phi[e.index_of({0, 1})], 0.5, 1e-9);
}

TEST(PotentialTest, RefusesCustomTables) {
  EXPECT_THROW(exact_potential(catalog::cycling_game()), InvalidArgument);
}

TEST(DynamicsTest, StartAtEquilibrium) {
  const Game g = build_game(catalog::two_by_three(), PayScheme::MakeShapley());
  const BestResponseRun run = best_response_dynamics(g, {1, 1});
  EXPECT_TRUE(run.converged);
  EXPECT_EQ(run.profile, (Profile{1, 1}));
  EXPECT_EQ(run.steps, 0u);
}

TEST(DynamicsTest, DominatedEquilibriumFromReference) {
  const Game g = build_game(catalog::dominated_equilibrium(), PayScheme::MakeShapley());
  for (auto order : {DeviationOrder::kRoundRobin, DeviationOrder::kMaxGain}) {
    const BestResponseRun run = best_response_dynamics(g, {0, 0}, order);
    EXPECT_TRUE(run.converged);
    EXPECT_EQ(run.profile, (Profile{1, 2}));
  }
}

TEST(DynamicsTest, CycleTripsWatchdog) {
  const BestResponseRun run = best_response_dynamics(catalog::cycling_game(), {0, 0});
  EXPECT_FALSE(run.converged);
}

TEST(CycleTest, CyclingGame) {
  const Game g = catalog::cycling_game();
  const auto cycle = find_deviation_cycle(g);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(cycle->profiles,
            (std::vector<Profile>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(cycle->deviators, (std::vector<int>{0, 1, 0, 1}));
  EXPECT_DOUBLE_EQ(cycle->excess_sum, 10.0);
  EXPECT_DOUBLE_EQ(cycle_excess_sum(g, cycle->profiles, cycle->deviators), 10.0);
}

TEST(CycleTest, SameCycleInFairGameSumsToZero) {
  const Game g = build_game(catalog::dominated_equilibrium(), PayScheme::MakeShapley());
  EXPECT_FALSE(find_deviation_cycle(g).has_value());
  const std::vector<Profile> loop = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_NEAR(cycle_excess_sum(g, loop, {0, 1, 0, 1}), 0.0, 1e-9);
  EXPECT_NEAR(cycle_excess_sum(g, {{0, 0}, {2, 0}}, {0, 0}), 0.0, 1e-12);
  EXPECT_NEAR(cycle_excess_sum(catalog::cycling_game(), {{0, 1}, {1, 1}}, {0, 0}),
              0.0, 1e-12);
}

TEST(CycleTest, MalformedCycle) {
  const Game g = catalog::cycling_game();
  EXPECT_THROW(cycle_excess_sum(g, {{0, 0}, {1, 1}}, {0, 1}), InvalidArgument);
  EXPECT_THROW(cycle_excess_sum(g, {{0, 0}, {1, 0}}, {0}), InvalidArgument);
}

TEST(ParetoTest, Examples) {
  const Game table4 = build_game(catalog::dominated_equilibrium(), PayScheme::MakeShapley());
  const auto dom = pareto_dominator(table4, {1, 2});
  ASSERT_TRUE(dom.has_value());
  EXPECT_EQ(*dom, (Profile{2, 1}));

  const Game coord = build_game(catalog::coordination(), PayScheme::MakeShapley());
  EXPECT_EQ(pure_nash(coord), (std::vector<Profile>{{0, 0}, {1, 1}}));
  const ParetoReport r = pareto_analysis(coord);
  EXPECT_TRUE(r.IsEfficient(coord.economy(), {1, 1}));
  EXPECT_FALSE(r.IsEfficient(coord.economy(), {0, 0}));
  EXPECT_EQ(pareto_dominator(coord, {0, 0}), (Profile{1, 1}));

  const Game single = build_game(Economy::Anonymous({1}, {0}, {0}), PayScheme::MakeShapley());
  EXPECT_TRUE(pareto_analysis(single).efficient[0]);
  EXPECT_FALSE(pareto_analysis(catalog::prisoners_dilemma()).efficient[3]);
}

TEST(SolveTest, ReportRanksByPotential) {
  const Game g = build_game(catalog::coordination(), PayScheme::MakeShapley());
  const EquilibriumReport r = solve(g);
  ASSERT_EQ(r.equilibria.size(), 2u);
  EXPECT_TRUE(r.has_potential);
  EXPECT_EQ(r.equilibria[0].profile, (Profile{1, 1}));
  EXPECT_TRUE(r.equilibria[0].pareto_efficient);
  EXPECT_EQ(r.equilibria[1].dominator, (Profile{1, 1}));
  EXPECT_FALSE(solve(catalog::prisoners_dilemma()).has_potential);
}

TEST(AuditTest, Examples) {
  const Economy e = catalog::two_by_three();
  CustomTable fair;
  for (const Profile& x : AllProfiles(e)) fair.payoffs.push_back(shapley_pay(e, x));
  EXPECT_TRUE(audit_fairness(e, fair).fair);

  const FairnessAudit unfair = audit_fairness(e, catalog::two_by_three_unfair());
  EXPECT_FALSE(unfair.fair);
  EXPECT_FALSE(unfair.marginality);

  const PublishingGames pub = build_publishing_economies();
  const FairnessAudit biased = audit_fairness(pub.biased.economy(), publishing_bias_table());
  EXPECT_FALSE(biased.fair);
  EXPECT_FALSE(biased.symmetry);
  EXPECT_LE(biased.diagnostics.size(), 16u);
}

TEST(AuditTest, LocalEfficiencyAndUnproductivity) {
  const Economy e = Economy::Anonymous({2, 2}, {0, 0}, {0, 0, 4, 4});
  const FairnessAudit a = audit_fairness(e, CustomTable{{{0, 0}, {0, 1}, {4, 0}, {3, 1}}});
  EXPECT_FALSE(a.local_efficiency);
  EXPECT_FALSE(a.unproductivity);
  EXPECT_FALSE(a.fair);
  EXPECT_NEAR(a.max_shapley_deviation, 1.0, 1e-12);
}

class RandomGameTest : public ::testing::TestWithParam<int> {};

TEST_P(RandomGameTest, FairGamesBehave) {
  std::mt19937_64 rng(1000 + GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const Economy e = testing::RandomEconomy(rng);
    std::uniform_real_distribution<double> cost(0.0, 3.0);
    ActionCosts costs(e.num_agents());
    for (int i = 0; i < e.num_agents(); ++i) {
      for (int a = 0; a < e.num_actions(i); ++a) {
        costs[i].push_back(a == e.reference()[i] ? 0.0 : cost(rng));
      }
    }
    for (const PayScheme& s : {PayScheme::MakeShapley(), PayScheme::MakeEgalitarian(0.5)}) {
      for (bool with_costs : {false, true}) {
        const Game g = build_game(e, s, with_costs ? std::optional(costs) : std::nullopt);
        std::vector<Profile> oracle;
        for (const Profile& x : AllProfiles(e)) {
          if (OracleNash(g, x)) oracle.push_back(x);
        }
        ASSERT_EQ(pure_nash(g), oracle);
        ASSERT_FALSE(oracle.empty());
        ASSERT_FALSE(find_deviation_cycle(g).has_value());

        const std::vector<double> phi = exact_potential(g);
        double top = phi[0];
        for (double v : phi) top = std::max(top, v);
        for (ProfileIndex k = 0; k < phi.size(); ++k) {
          const Profile x = e.profile_at(k);
          if (phi[k] >= top - 1e-9) ASSERT_TRUE(is_pure_nash(g, x));
          for (int i = 0; i < e.num_agents(); ++i) {
            for (int a = 0; a < e.num_actions(i); ++a) {
              Profile y = x;
              y[i] = a;
              ASSERT_NEAR(g.payoff(i, y) - g.payoff(i, x),
                          phi[e.index_of(y)] - phi[k], 1e-9);
            }
          }
        }
        const BestResponseRun run = best_response_dynamics(g, e.profile_at(0));
        ASSERT_TRUE(run.converged);
        ASSERT_TRUE(is_pure_nash(g, run.profile));

        const ParetoReport pr = pareto_analysis(g);
        for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
          bool dominated = false;
          for (ProfileIndex j = 0; j < e.num_profiles() && !dominated; ++j) {
            bool geq = true;
            bool gt = false;
            for (int i = 0; i < e.num_agents(); ++i) {
              geq = geq && g.payoff(i, j) >= g.payoff(i, k) - kTolerance;
              gt = gt || g.payoff(i, j) > g.payoff(i, k) + kTolerance;
            }
            dominated = geq && gt;
          }
          ASSERT_EQ(pr.efficient[k], !dominated);
          ASSERT_EQ(pr.dominator[k].has_value(), dominated);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGameTest, ::testing::Range(0, 5));

TEST(CustomTableGameTest, MatchesOracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> value(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Economy e = testing::RandomEconomy(rng, {.max_agents = 3, .max_actions = 3});
    CustomTable t;
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      Payoffs p(e.num_agents());
      for (double& v : p) v = std::round(value(rng));
      t.payoffs.push_back(p);
    }
    const Game g = build_game(e, PayScheme::MakeCustom(t));
    std::vector<Profile> oracle;
    for (const Profile& x : AllProfiles(e)) {
      if (OracleNash(g, x)) oracle.push_back(x);
    }
    ASSERT_EQ(pure_nash(g), oracle);
    const auto cycle = find_deviation_cycle(g, 8);
    if (cycle) {
      ASSERT_NEAR(cycle_excess_sum(g, cycle->profiles, cycle->deviators),
                  cycle->excess_sum, 1e-12);
      ASSERT_GT(cycle->excess_sum, 0.0);
    }
  }
}

}  // namespace
}  // namespace fairgame
