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

#ifndef FAIRGAME_EXCHANGE_H_
#define FAIRGAME_EXCHANGE_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairgame/economy.h"
#include "fairgame/equilibrium.h"
#include "fairgame/pay_schemes.h"

namespace fairgame {

// Quantities of each good.
using Bundle = std::vector<double>;

enum class ExchangeMode {
  kPureExchange,        // surplus Σ_j [u_j(x_j) - u_j(w_j)]
  kTransferablePayoff,  // surplus Σ_j [f_j(x_j) - f_j(w_j)]
};

// Optional reduction of each agent's choice to a small set of decisions, each
// decision profile mapping to one allocation.
struct DecisionLayer {
  std::vector<std::vector<std::string>> labels;  // per agent
  Profile reference;
  std::function<std::vector<Bundle>(const Profile&)> allocation;
};

struct ExchangeSpec {
  int goods = 1;
  std::vector<std::string> agent_names;
  std::vector<Bundle> endowments;
  std::vector<std::vector<Bundle>> consumption_sets;
  // u_i in pure exchange, f_i with transferable payoff.
  std::vector<std::function<double(const Bundle&)>> utilities;
  ExchangeMode mode = ExchangeMode::kPureExchange;
  std::optional<DecisionLayer> decisions;
};

// An exchange economy recast as a free economy: actions are bundles (or
// decisions) and the reference is the endowment profile.
class ExchangeEconomy {
 public:
  const Economy& economy() const { return economy_; }
  const ExchangeSpec& spec() const { return spec_; }

  // Bundles held by each agent at action profile x.
  std::vector<Bundle> Allocation(const Profile& x) const;
  // Σ_j x_j ≤ Σ_j w_j componentwise.
  bool IsFeasible(const Profile& x) const;
  // u_i or f_i of agent i's bundle at x.
  double RawUtility(int agent, const Profile& x) const;

 private:
  friend ExchangeEconomy build_exchange_economy(ExchangeSpec spec);
  ExchangeEconomy(Economy economy, ExchangeSpec spec)
      : economy_(std::move(economy)), spec_(std::move(spec)) {}

  Economy economy_;
  ExchangeSpec spec_;
};

// Throws InvalidArgument when an endowment is not in the agent's consumption
// set, when bundles have the wrong number of goods, or when the decision
// layer's reference does not map to the endowments.
ExchangeEconomy build_exchange_economy(ExchangeSpec spec);

struct ExchangeOutcome {
  // Nash equilibria of the unrestricted game that are feasible.
  std::vector<Profile> feasible_nash;
  // Feasible profiles where no agent gains by a unilateral move that keeps
  // the profile feasible.
  std::vector<Profile> constrained_nash;
  // Feasible maximizers of the game's exact potential.
  std::vector<Profile> fair_outcomes;
};

ExchangeOutcome solve_exchange(const ExchangeEconomy& ex,
                               const PayScheme& scheme = PayScheme::MakeShapley());

// "(1,0)"-style label of a bundle.
std::string BundleLabel(const Bundle& b);

}  // namespace fairgame

#endif  // FAIRGAME_EXCHANGE_H_
