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

#ifndef FAIRGAME_APPLICATIONS_H_
#define FAIRGAME_APPLICATIONS_H_

#include "fairgame/economy.h"
#include "fairgame/equilibrium.h"
#include "fairgame/exchange.h"
#include "fairgame/pay_schemes.h"

namespace fairgame {

// Shapley split of a bonus table net of separable effort costs. Throws as
// build_game does.
Game build_teamwork_economy(const Economy& bonus, const ActionCosts& costs);

// Two workers with four effort levels each, inactive at the first.
Economy teamwork_bonus();
ActionCosts teamwork_costs();

// Two researchers choosing topics 0..3, inactive at 0.
Economy publishing_economy();
// The biased allocation of published articles.
CustomTable publishing_bias_table();

struct PublishingGames {
  Game biased;
  Game fair;
};

PublishingGames build_publishing_economies();

// Example markets. Agents are named "A"/"B" in pure exchange and "1"/"2"
// with transferable payoff.
ExchangeSpec unit_demand_exchange();     // no competitive equilibrium
ExchangeSpec quasilinear_swap_market();  // sell a, b or c units of endowment
ExchangeSpec homogeneous_market();       // f_i = √x, w = (1, 1)
ExchangeSpec heterogeneous_market();     // f_1 = x²/2, f_2 = x², w = (1, 2)

}  // namespace fairgame

#endif  // FAIRGAME_APPLICATIONS_H_
