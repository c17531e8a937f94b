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

#include <algorithm>
#include <cmath>

namespace fairgame {

Game build_teamwork_economy(const Economy& bonus, const ActionCosts& costs) {
  return build_game(bonus, PayScheme::MakeShapley(), costs);
}

Economy teamwork_bonus() {
  return Economy({"Bettina", "Diana"},
                 {{"b1", "b2", "b3", "b4"}, {"d1", "d2", "d3", "d4"}}, {0, 0},
                 {0, 5, 1, 13,    //
                  2, 8, 10, 2,    //
                  5, 13, 1, 13,   //
                  3, 9, 13, 2});
}

ActionCosts teamwork_costs() { return {{0, 4, 4, 3}, {0, 4, 4, 5}}; }

Economy publishing_economy() {
  return Economy({"1", "2"}, {{"0", "1", "2", "3"}, {"0", "1", "2", "3"}},
                 {0, 0},
                 {0, 10, 8, 4,     //
                  10, 20, 14, 8,   //
                  8, 14, 10, 8,    //
                  4, 8, 8, 6});
}

CustomTable publishing_bias_table() {
  return {{{0, 0}, {0, 10}, {0, 8}, {0, 4},   //
           {5, 5}, {5, 15}, {4, 10}, {2, 6},  //
           {3, 5}, {6, 8}, {1, 9}, {3, 5},    //
           {3, 1}, {4, 4}, {4, 4}, {2, 4}}};
}

PublishingGames build_publishing_economies() {
  const Economy e = publishing_economy();
  return {build_game(e, PayScheme::MakeCustom(publishing_bias_table())),
          build_game(e, PayScheme::MakeShapley())};
}

ExchangeSpec unit_demand_exchange() {
  ExchangeSpec spec;
  spec.goods = 2;
  spec.agent_names = {"A", "B"};
  spec.endowments = {{1, 0}, {2, 1}};
  spec.consumption_sets = {{{1, 0}, {0, 0}},
                           {{2, 1}, {1, 1}, {0, 1}, {2, 0}, {1, 0}, {0, 0}}};
  spec.utilities = {[](const Bundle& x) { return x[0] + x[1]; },
                    [](const Bundle& x) { return std::min(x[0], x[1]); }};
  return spec;
}

ExchangeSpec quasilinear_swap_market() {
  ExchangeSpec spec;
  spec.goods = 2;
  spec.agent_names = {"A", "B"};
  spec.endowments = {{2, 0}, {0, 2}};
  std::vector<Bundle> grid;
  for (int g1 = 0; g1 <= 2; ++g1) {
    for (int g2 = 0; g2 <= 2; ++g2) grid.push_back({double(g1), double(g2)});
  }
  spec.consumption_sets = {grid, grid};
  spec.utilities = {
      [](const Bundle& x) { return x[0] + 3 * x[1] - 0.5 * x[1] * x[1]; },
      [](const Bundle& x) { return x[1] + 3 * x[0] - 0.5 * x[0] * x[0]; }};
  DecisionLayer d;
  d.labels = {{"a", "b", "c"}, {"a", "b", "c"}};
  d.reference = {0, 0};
  // Decision s sells s units of the agent's endowed good to the other agent.
  d.allocation = [](const Profile& s) {
    const double sa = s[0];
    const double sb = s[1];
    return std::vector<Bundle>{{2 - sa, sb}, {sa, 2 - sb}};
  };
  spec.decisions = std::move(d);
  return spec;
}

ExchangeSpec homogeneous_market() {
  ExchangeSpec spec;
  spec.goods = 1;
  spec.mode = ExchangeMode::kTransferablePayoff;
  spec.agent_names = {"1", "2"};
  spec.endowments = {{1}, {1}};
  spec.consumption_sets = {{{0}, {1}, {2}}, {{0}, {1}, {2}}};
  auto root = [](const Bundle& x) { return std::sqrt(x[0]); };
  spec.utilities = {root, root};
  return spec;
}

ExchangeSpec heterogeneous_market() {
  ExchangeSpec spec;
  spec.goods = 1;
  spec.mode = ExchangeMode::kTransferablePayoff;
  spec.agent_names = {"1", "2"};
  spec.endowments = {{1}, {2}};
  spec.consumption_sets = {{{0}, {1}, {2}, {3}}, {{0}, {1}, {2}, {3}}};
  spec.utilities = {[](const Bundle& x) { return 0.5 * x[0] * x[0]; },
                    [](const Bundle& x) { return x[0] * x[0]; }};
  return spec;
}

}  // namespace fairgame
