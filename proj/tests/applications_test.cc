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

#include "fairgame/applications.h"

#include <gtest/gtest.h>

#include "fairgame/errors.h"
#include "fairgame/exchange.h"
#include "testing.h"

namespace fairgame {
namespace {

using testing::AllProfiles;
using testing::MaxAbsDiff;

std::vector<Profile> ByLabel(const Economy& e,
                             const std::vector<std::vector<std::string>>& rows) {
  std::vector<Profile> out;
  for (const auto& labels : rows) {
    Profile x;
    for (int i = 0; i < e.num_agents(); ++i) {
      const auto& acts = e.action_labels(i);
      x.push_back(static_cast<int>(
          std::find(acts.begin(), acts.end(), labels[i]) - acts.begin()));
    }
    out.push_back(x);
  }
  return out;
}

TEST(TeamworkTest, ShapleyBonusTensor) {
  const Game bonus = build_game(teamwork_bonus(), PayScheme::MakeShapley());
  const std::vector<Payoffs> want = {
      {0, 0}, {0, 5},     {0, 1},     {0, 13},    //
      {2, 0}, {2.5, 5.5}, {5.5, 4.5}, {-4.5, 6.5},  //
      {5, 0}, {6.5, 6.5}, {2.5, -1.5}, {2.5, 10.5},  //
      {3, 0}, {3.5, 5.5}, {7.5, 5.5}, {-4, 6}};
  for (ProfileIndex k = 0; k < want.size(); ++k) {
    EXPECT_LE(MaxAbsDiff(bonus.payoffs(bonus.economy().profile_at(k)), want[k]), 1e-9)
        << k;
  }
}

TEST(TeamworkTest, NetTensorAndEquilibria) {
  const Game g = build_teamwork_economy(teamwork_bonus(), teamwork_costs());
  const std::vector<Payoffs> want = {
      {0, 0},  {0, 1},       {0, -3},       {0, 8},         //
      {-2, 0}, {-1.5, 1.5},  {1.5, 0.5},    {-8.5, 1.5},    //
      {1, 0},  {2.5, 2.5},   {-1.5, -5.5},  {-1.5, 5.5},    //
      {0, 0},  {0.5, 1.5},   {4.5, 1.5},    {-7, 1}};
  for (ProfileIndex k = 0; k < want.size(); ++k) {
    EXPECT_LE(MaxAbsDiff(g.payoffs(g.economy().profile_at(k)), want[k]), 1e-9) << k;
  }
  const EquilibriumReport r = solve(g);
  std::vector<Profile> eqs;
  for (const auto& entry : r.equilibria) {
    eqs.push_back(entry.profile);
    EXPECT_TRUE(entry.pareto_efficient);
  }
  std::sort(eqs.begin(), eqs.end());
  EXPECT_EQ(eqs, ByLabel(g.economy(), {{"b1", "d4"}, {"b4", "d3"}}));
}

TEST(TeamworkTest, ZeroCostsGiveBonusTensor) {
  const ActionCosts zero = {{0, 0, 0, 0}, {0, 0, 0, 0}};
  const Game g = build_teamwork_economy(teamwork_bonus(), zero);
  const Game bonus = build_game(teamwork_bonus(), PayScheme::MakeShapley());
  for (const Profile& x : AllProfiles(g.economy())) {
    EXPECT_LE(MaxAbsDiff(g.payoffs(x), bonus.payoffs(x)), 1e-12);
  }
  EXPECT_THROW(build_teamwork_economy(teamwork_bonus(), {{1, 0, 0, 0}, {0, 0, 0, 0}}),
               InvalidArgument);
}

TEST(PublishingTest, BiasedGame) {
  const PublishingGames games = build_publishing_economies();
  EXPECT_EQ(games.biased.payoffs(Profile{1, 1}), (Payoffs{5, 15}));
  const EquilibriumReport r = solve(games.biased);
  ASSERT_EQ(r.equilibria.size(), 1u);
  EXPECT_EQ(r.equilibria[0].profile, (Profile{3, 2}));
  EXPECT_EQ(r.equilibria[0].payoffs, (Payoffs{4, 4}));
  EXPECT_FALSE(r.equilibria[0].pareto_efficient);
  EXPECT_DOUBLE_EQ(games.biased.economy().surplus({3, 2}), 8.0);
}

// Shapley split of the knowledge function, from the two-agent closed form
// Sh_1(x) = (f(x) + f(x_1, 0) - f(0, x_2)) / 2.
TEST(PublishingTest, FairGameTensor) {
  const PublishingGames games = build_publishing_economies();
  const Economy& e = games.fair.economy();
  for (const Profile& x : AllProfiles(e)) {
    double s1 = 0.0;
    if (x[0] != 0 && x[1] != 0) {
      s1 = (e.surplus(x) + e.surplus({x[0], 0}) - e.surplus({0, x[1]})) / 2;
    } else if (x[0] != 0) {
      s1 = e.surplus(x);
    }
    EXPECT_LE(MaxAbsDiff(games.fair.payoffs(x), {s1, e.surplus(x) - s1}), 1e-9);
  }
  const std::vector<Payoffs> frozen = {
      {0, 0},  {0, 10}, {0, 8}, {0, 4},  //
      {10, 0}, {10, 10}, {8, 6}, {7, 1},  //
      {8, 0},  {6, 8},  {5, 5}, {6, 2},  //
      {4, 0},  {1, 7},  {2, 6}, {3, 3}};
  for (ProfileIndex k = 0; k < frozen.size(); ++k) {
    EXPECT_LE(MaxAbsDiff(games.fair.payoffs(e.profile_at(k)), frozen[k]), 1e-9);
  }
  const EquilibriumReport r = solve(games.fair);
  ASSERT_EQ(r.equilibria.size(), 1u);
  EXPECT_EQ(r.equilibria[0].profile, (Profile{1, 1}));
  EXPECT_EQ(r.equilibria[0].payoffs, (Payoffs{10, 10}));
  EXPECT_TRUE(r.equilibria[0].pareto_efficient);
  for (const Profile& x : AllProfiles(e)) {
    const Payoffs p = games.fair.payoffs(x);
    const Payoffs q = games.fair.payoffs(Profile{x[1], x[0]});
    EXPECT_NEAR(p[0], q[1], 1e-12);
  }
}

TEST(ExchangeTest, UnitDemand) {
  const ExchangeEconomy ex = build_exchange_economy(unit_demand_exchange());
  const ExchangeOutcome out = solve_exchange(ex);
  const auto want = ByLabel(ex.economy(), {{"(1,0)", "(2,1)"}, {"(1,0)", "(1,1)"}});
  EXPECT_EQ(out.fair_outcomes, want);
  EXPECT_EQ(out.feasible_nash, want);
  const Game g = build_game(ex.economy(), PayScheme::MakeShapley());
  for (const Profile& x : want) EXPECT_LE(MaxAbsDiff(g.payoffs(x), {0, 0}), 1e-12);
  EXPECT_EQ(ex.economy().reference(), want[0]);
}

TEST(ExchangeTest, QuasilinearSwap) {
  const ExchangeEconomy ex = build_exchange_economy(quasilinear_swap_market());
  const ExchangeOutcome out = solve_exchange(ex);
  EXPECT_EQ(out.fair_outcomes, (std::vector<Profile>{{2, 2}}));
  EXPECT_EQ(out.feasible_nash, (std::vector<Profile>{{2, 2}}));
  const auto alloc = ex.Allocation({2, 2});
  EXPECT_EQ(alloc, (std::vector<Bundle>{{0, 2}, {2, 0}}));
  const Game g = build_game(ex.economy(), PayScheme::MakeShapley());
  EXPECT_LE(MaxAbsDiff(g.payoffs(Profile{2, 2}), {2, 2}), 1e-12);
}

TEST(ExchangeTest, TransferablePayoffMarkets) {
  const ExchangeEconomy homo = build_exchange_economy(homogeneous_market());
  EXPECT_EQ(solve_exchange(homo).fair_outcomes,
            ByLabel(homo.economy(), {{"(1)", "(1)"}}));
  const ExchangeEconomy hetero = build_exchange_economy(heterogeneous_market());
  const ExchangeOutcome out = solve_exchange(hetero);
  EXPECT_EQ(out.fair_outcomes, ByLabel(hetero.economy(), {{"(0)", "(3)"}}));
  EXPECT_TRUE(out.feasible_nash.empty());
  EXPECT_FALSE(hetero.IsFeasible(ByLabel(hetero.economy(), {{"(3)", "(3)"}})[0]));
  EXPECT_TRUE(hetero.IsFeasible(ByLabel(hetero.economy(), {{"(1)", "(2)"}})[0]));
}

TEST(ExchangeTest, ConstrainedNashRespectsFeasibility) {
  for (const ExchangeSpec& spec : {unit_demand_exchange(), homogeneous_market(),
                                   heterogeneous_market()}) {
    const ExchangeEconomy ex = build_exchange_economy(spec);
    const Game g = build_game(ex.economy(), PayScheme::MakeShapley());
    const Economy& e = ex.economy();
    std::vector<Profile> oracle;
    for (const Profile& x : AllProfiles(e)) {
      if (!ex.IsFeasible(x)) continue;
      bool stable = true;
      for (int i = 0; i < e.num_agents(); ++i) {
        for (int a = 0; a < e.num_actions(i); ++a) {
          Profile y = x;
          y[i] = a;
          if (ex.IsFeasible(y) && g.payoff(i, y) > g.payoff(i, x) + kTolerance) {
            stable = false;
          }
        }
      }
      if (stable) oracle.push_back(x);
    }
    EXPECT_EQ(solve_exchange(ex).constrained_nash, oracle);
  }
}

TEST(ExchangeTest, RejectsEndowmentOutsideConsumptionSet) {
  ExchangeSpec spec = homogeneous_market();
  spec.endowments[0] = {5};
  EXPECT_THROW(build_exchange_economy(spec), InvalidArgument);
  EXPECT_EQ(BundleLabel({1, 0}), "(1,0)");
  EXPECT_EQ(BundleLabel({1.5}), "(1.5)");
}

}  // namespace
}  // namespace fairgame
