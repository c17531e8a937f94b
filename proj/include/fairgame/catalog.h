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

#ifndef FAIRGAME_CATALOG_H_
#define FAIRGAME_CATALOG_H_

#include "fairgame/economy.h"
#include "fairgame/equilibrium.h"
#include "fairgame/pay_schemes.h"

// Small two- and three-agent economies used in the documentation, the bundled
// corpus and the regression suite.
namespace fairgame::catalog {

// Agent 1 in {a1,a2}, agent 2 in {b1,b2,b3}, o = (a1,b1).
Economy two_by_three();
// A payoff table on two_by_three() that sums to f but is not the Shapley split.
CustomTable two_by_three_unfair();

// Agent 1 in {c,d}, agent 2 in {a,b}: a game with an improvement cycle.
Game cycling_game();

// Agent 1 in {a1,a2,a3}, agent 2 in {b1..b4}: a fair game whose unique
// equilibrium is Pareto-dominated.
Economy dominated_equilibrium();

// Agent 1 in {c,d}, agent 2 in {a,b}, o = (c,a); surplus 2 at (d,b) only.
Economy coordination();

// 2×2 economies with surplus 0,1,2,3 and 0,1,1,3 plus their biased tables.
Economy monotone_f();
CustomTable monotone_f_table();
Economy monotone_g();
CustomTable monotone_g_table();

Game prisoners_dilemma();

// Three regions: agent 1 in {a,b,c}, agent 2 in {a,b}, agent 3 in {a}.
Economy tax_revenue();

}  // namespace fairgame::catalog

#endif  // FAIRGAME_CATALOG_H_
