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

#ifndef FAIRGAME_EQUILIBRIUM_H_
#define FAIRGAME_EQUILIBRIUM_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairgame/economy.h"
#include "fairgame/pay_schemes.h"

namespace fairgame {

// Per-agent, per-action nonnegative costs; the reference action costs zero.
using ActionCosts = std::vector<std::vector<double>>;

// A finite strategic-form game generated by an economy and a pay scheme:
// payoff(x) = pay(e, scheme, x) minus each agent's action cost.
class Game {
 public:
  const Economy& economy() const { return economy_; }
  const PayScheme& scheme() const { return scheme_; }
  const std::optional<ActionCosts>& costs() const { return costs_; }

  int num_agents() const { return economy_.num_agents(); }
  std::size_t num_profiles() const { return economy_.num_profiles(); }

  double payoff(int agent, ProfileIndex k) const {
    return payoffs_[k * num_agents() + agent];
  }
  double payoff(int agent, const Profile& x) const {
    return payoff(agent, economy_.index_of(x));
  }
  std::span<const double> payoffs(ProfileIndex k) const {
    return {payoffs_.data() + k * num_agents(),
            static_cast<std::size_t>(num_agents())};
  }
  Payoffs payoffs(const Profile& x) const;

  // Cost of `agent` choosing `action`; zero when no costs are attached.
  double cost(int agent, int action) const;
  // Σ_i cost_i(x_i).
  double total_cost(const Profile& x) const;

  // True for every scheme except CustomTable.
  bool scheme_generated() const { return !scheme_.is_custom(); }

 private:
  friend Game build_game(const Economy&, const PayScheme&,
                         std::optional<ActionCosts>, double);
  Game(Economy economy, PayScheme scheme, std::optional<ActionCosts> costs)
      : economy_(std::move(economy)),
        scheme_(std::move(scheme)),
        costs_(std::move(costs)) {}

  Economy economy_;
  PayScheme scheme_;
  std::optional<ActionCosts> costs_;
  std::vector<double> payoffs_;  // |X| × n, row-major by profile
};

// Builds the payoff tensor. Throws PreconditionError when the scheme does not
// apply to `e`, InvalidArgument on malformed or negative costs or a nonzero
// reference cost, and SizeCapExceeded when the Shapley term count exceeds
// `max_terms`.
Game build_game(const Economy& e, const PayScheme& scheme,
                std::optional<ActionCosts> costs = std::nullopt,
                double max_terms = kDefaultMaxShapleyTerms);

// A game given directly as a payoff table. The economy's surplus is the sum
// of payoffs at each profile and the reference is every agent's first action.
Game game_from_table(std::vector<std::string> agent_names,
                     std::vector<std::vector<std::string>> actions,
                     std::vector<Payoffs> payoffs);

// True iff no agent gains more than kTolerance by a unilateral deviation.
bool is_pure_nash(const Game& g, const Profile& x);

// Every pure-strategy Nash equilibrium, in profile index order.
std::vector<Profile> pure_nash(const Game& g);

// Exact potential of a scheme-generated game:
//   Φ(x) = α·Σ_{y∈Δ(x), y≠o} c_y/|y| + (1-α)·f(x)/n - Σ_i cost_i(x_i)
// with c the dividends of f - f(o). Indexed by ProfileIndex. Throws
// InvalidArgument for custom payoff tables.
std::vector<double> exact_potential(const Game& g);

enum class DeviationOrder {
  kRoundRobin,  // agents 0..n-1 in turn, each playing a best response
  kMaxGain,     // the agent with the largest available gain moves
};

struct BestResponseRun {
  Profile profile;
  bool converged = false;
  std::size_t steps = 0;  // strict improvements taken
};

// Strict best-response dynamics from `start`. A move needs a gain above
// kTolerance; ties keep the current action, else the lowest action index.
// Stops after |X|·n·max|X_i| moves without convergence.
BestResponseRun best_response_dynamics(
    const Game& g, const Profile& start,
    DeviationOrder order = DeviationOrder::kRoundRobin);

// A closed chain of unilateral moves x^1 → x^2 → … → x^k → x^1 where
// deviators[l] moves from profiles[l] to profiles[l+1].
struct DeviationCycle {
  std::vector<Profile> profiles;
  std::vector<int> deviators;
  double excess_sum = 0.0;
};

// Searches the strict-improvement digraph for a directed cycle of length at
// most `max_len`. Returns a shortest one, starting at the lowest profile
// index that attains that length; neighbors are explored in (agent, action)
// order.
std::optional<DeviationCycle> find_deviation_cycle(const Game& g,
                                                   int max_len = 8);

// S(L, u) = Σ_l [u_{j_l}(x^{l+1}) - u_{j_l}(x^l)] with x^{k+1} = x^1. The
// cycle must consist of unilateral moves by the listed deviators. Throws
// InvalidArgument otherwise.
double cycle_excess_sum(const Game& g, const std::vector<Profile>& cycle,
                        const std::vector<int>& deviators);

// Visits every simple cycle of unilateral moves (improving or not) of length
// 2..max_len whose smallest profile index is its first element. The visitor
// returns false to stop the enumeration.
void enumerate_unilateral_cycles(
    const Game& g, int max_len,
    const std::function<bool(const std::vector<Profile>&,
                             const std::vector<int>&)>& visit);

struct ParetoReport {
  std::vector<bool> efficient;                   // by ProfileIndex
  std::vector<std::optional<Profile>> dominator;  // witness when dominated

  bool IsEfficient(const Economy& e, const Profile& x) const {
    return efficient[e.index_of(x)];
  }
};

// A profile is efficient iff no other profile is weakly better for everyone
// and strictly better for someone. The witness for a dominated profile is the
// dominator with the largest payoff sum (lowest index on ties), which is
// itself efficient.
ParetoReport pareto_analysis(const Game& g);

// Pareto status of a single profile, with the same witness rule.
std::optional<Profile> pareto_dominator(const Game& g, const Profile& x);

struct EquilibriumEntry {
  Profile profile;
  Payoffs payoffs;
  bool pareto_efficient = false;
  std::optional<Profile> dominator;
  std::optional<double> potential;
};

struct EquilibriumReport {
  // Ranked by potential (highest first) when available, then profile index.
  std::vector<EquilibriumEntry> equilibria;
  bool has_potential = false;
};

EquilibriumReport solve(const Game& g);

struct FairnessAudit {
  bool fair = false;                 // table equals Shapley pay everywhere
  bool local_efficiency = true;      // payoffs sum to f(x)
  bool unproductivity = true;        // unproductive agents are paid zero
  bool symmetry = true;              // swap-invariant agents paid equally
  bool marginality = true;           // pairwise profile comparison
  double max_shapley_deviation = 0.0;
  std::vector<std::string> diagnostics;
};

// Audits a payoff table against the ALUM axioms on the economy's surplus.
// Symmetry checks agent pairs (i, j) active at x whose transposition leaves
// f restricted to Δ(x) unchanged. Marginality compares, for each agent i,
// profiles x and y with N^x = N^y: if i's marginal contributions at x
// dominate those at y coalition by coalition, i's pay at x must not be lower.
FairnessAudit audit_fairness(const Economy& e, const CustomTable& table);

}  // namespace fairgame

#endif  // FAIRGAME_EQUILIBRIUM_H_
