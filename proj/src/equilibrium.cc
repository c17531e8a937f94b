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

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

// Cap on diagnostics recorded per axiom by audit_fairness.
constexpr int kMaxDiagnosticsPerAxiom = 4;

// Index of the profile reached when `agent` switches from its action in `k`
// to `action`.
ProfileIndex Deviate(const Economy& e, ProfileIndex k, int agent, int action) {
  const std::size_t stride = e.stride(agent);
  const int current = static_cast<int>((k / stride) % e.num_actions(agent));
  return k - stride * current + stride * action;
}

int ActionAt(const Economy& e, ProfileIndex k, int agent) {
  return static_cast<int>((k / e.stride(agent)) % e.num_actions(agent));
}

// Out-neighbors of k in the strict-improvement digraph, (agent, action) order.
std::vector<std::pair<ProfileIndex, int>> ImprovingMoves(const Game& g,
                                                         ProfileIndex k) {
  const Economy& e = g.economy();
  std::vector<std::pair<ProfileIndex, int>> out;
  for (int i = 0; i < e.num_agents(); ++i) {
    const int current = ActionAt(e, k, i);
    const double base = g.payoff(i, k);
    for (int a = 0; a < e.num_actions(i); ++a) {
      if (a == current) continue;
      const ProfileIndex to = Deviate(e, k, i, a);
      if (g.payoff(i, to) > base + kTolerance) out.emplace_back(to, i);
    }
  }
  return out;
}

// Tarjan's strongly connected components over the improvement digraph.
std::vector<int> ImprovementComponents(const Game& g, int* count) {
  const std::size_t n = g.num_profiles();
  std::vector<std::vector<std::pair<ProfileIndex, int>>> adj(n);
  for (ProfileIndex k = 0; k < n; ++k) adj[k] = ImprovingMoves(g, k);

  std::vector<int> comp(n, -1), low(n, 0), order(n, -1);
  std::vector<ProfileIndex> stack;
  std::vector<bool> on_stack(n, false);
  int next_order = 0;
  *count = 0;
  // Iterative DFS frames: (node, next edge position).
  std::vector<std::pair<ProfileIndex, std::size_t>> frames;
  for (ProfileIndex root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    frames.emplace_back(root, 0);
    order[root] = low[root] = next_order++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        const ProfileIndex w = adj[v][pos++].first;
        if (order[w] < 0) {
          order[w] = low[w] = next_order++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      if (low[v] == order[v]) {
        ProfileIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = *count;
        } while (w != v);
        ++*count;
      }
      const ProfileIndex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const ProfileIndex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

void ValidateCosts(const Economy& e, const ActionCosts& costs) {
  if (static_cast<int>(costs.size()) != e.num_agents()) {
    throw InvalidArgument("cost table needs one row per agent");
  }
  for (int i = 0; i < e.num_agents(); ++i) {
    if (static_cast<int>(costs[i].size()) != e.num_actions(i)) {
      throw InvalidArgument("cost row for agent '" + e.agent_names()[i] +
                            "' needs one entry per action");
    }
    for (int a = 0; a < e.num_actions(i); ++a) {
      if (!(costs[i][a] >= 0.0)) {
        throw InvalidArgument("negative cost for agent '" +
                              e.agent_names()[i] + "' action '" +
                              e.action_labels(i)[a] + "'");
      }
    }
    if (costs[i][e.reference()[i]] != 0.0) {
      throw InvalidArgument("reference action of agent '" +
                            e.agent_names()[i] + "' must cost zero");
    }
  }
}

// Largest-sum dominator of k, if any.
std::optional<ProfileIndex> Dominator(const Game& g, ProfileIndex k) {
  const int n = g.num_agents();
  const auto base = g.payoffs(k);
  std::optional<ProfileIndex> best;
  double best_sum = 0.0;
  for (ProfileIndex y = 0; y < g.num_profiles(); ++y) {
    if (y == k) continue;
    const auto other = g.payoffs(y);
    bool weakly = true;
    bool strictly = false;
    for (int i = 0; i < n && weakly; ++i) {
      if (other[i] < base[i] - kTolerance) weakly = false;
      if (other[i] > base[i] + kTolerance) strictly = true;
    }
    if (!weakly || !strictly) continue;
    const double sum = std::accumulate(other.begin(), other.end(), 0.0);
    if (!best || sum > best_sum + kTolerance) {
      best = y;
      best_sum = sum;
    }
  }
  return best;
}

}  // namespace

Payoffs Game::payoffs(const Profile& x) const {
  const auto row = payoffs(economy_.index_of(x));
  return Payoffs(row.begin(), row.end());
}

double Game::cost(int agent, int action) const {
  if (!costs_) return 0.0;
  return (*costs_)[agent][action];
}

double Game::total_cost(const Profile& x) const {
  double total = 0.0;
  for (int i = 0; i < num_agents(); ++i) total += cost(i, x[i]);
  return total;
}

Game build_game(const Economy& e, const PayScheme& scheme,
                std::optional<ActionCosts> costs, double max_terms) {
  CheckApplicable(e, scheme);
  if (!scheme.is_custom()) {
    const double terms = ShapleyTermCount(e);
    if (terms > max_terms) {
      std::ostringstream os;
      os << "game construction needs " << terms
         << " Shapley terms, above the cap of " << max_terms;
      throw SizeCapExceeded(os.str());
    }
  }
  if (costs) ValidateCosts(e, *costs);
  Game g(e, scheme, std::move(costs));
  const int n = e.num_agents();
  g.payoffs_.resize(e.num_profiles() * n);
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    const Profile x = e.profile_at(k);
    const Payoffs v = pay(e, scheme, x);
    for (int i = 0; i < n; ++i) {
      g.payoffs_[k * n + i] = v[i] - g.cost(i, x[i]);
    }
  }
  return g;
}

Game game_from_table(std::vector<std::string> agent_names,
                     std::vector<std::vector<std::string>> actions,
                     std::vector<Payoffs> payoffs) {
  std::vector<double> surplus;
  surplus.reserve(payoffs.size());
  for (const Payoffs& v : payoffs) {
    surplus.push_back(std::accumulate(v.begin(), v.end(), 0.0));
  }
  Profile reference(actions.size(), 0);
  Economy e(std::move(agent_names), std::move(actions), std::move(reference),
            std::move(surplus));
  return build_game(e, PayScheme::MakeCustom(CustomTable{std::move(payoffs)}));
}

bool is_pure_nash(const Game& g, const Profile& x) {
  const Economy& e = g.economy();
  const ProfileIndex k = e.index_of(x);
  for (int i = 0; i < e.num_agents(); ++i) {
    const double base = g.payoff(i, k);
    for (int a = 0; a < e.num_actions(i); ++a) {
      if (g.payoff(i, Deviate(e, k, i, a)) > base + kTolerance) return false;
    }
  }
  return true;
}

std::vector<Profile> pure_nash(const Game& g) {
  const Economy& e = g.economy();
  std::vector<Profile> out;
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    Profile x = e.profile_at(k);
    if (is_pure_nash(g, x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<double> exact_potential(const Game& g) {
  if (!g.scheme_generated()) {
    throw InvalidArgument(
        "exact potential is only defined for scheme-generated games");
  }
  const Economy& e = g.economy();
  const int n = e.num_agents();
  const double alpha = g.scheme().alpha();
  const double shift =
      std::holds_alternative<PayScheme::ShiftedShapley>(g.scheme().kind())
          ? e.surplus_at(e.reference_index())
          : 0.0;
  std::vector<double> shifted(e.surplus_table().begin(),
                              e.surplus_table().end());
  for (double& v : shifted) v -= shift;
  const Economy base = e.WithSurplus(shifted);
  const DividendTable div = dividends(base);

  // Σ_{y∈Δ(x)} c_y/|y| is the per-coordinate running sum of the scaled
  // dividends, the inverse of the transform that produced them.
  std::vector<double> acc(e.num_profiles(), 0.0);
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    if (k == e.reference_index()) continue;
    acc[k] = div.coeffs[k] / active_set(e, e.profile_at(k)).size();
  }
  for (int i = 0; i < n; ++i) {
    const int ref = e.reference()[i];
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      const int digit = ActionAt(e, k, i);
      if (digit == ref) continue;
      acc[k] += acc[Deviate(e, k, i, ref)];
    }
  }
  std::vector<double> phi(e.num_profiles());
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    const Profile x = e.profile_at(k);
    phi[k] = alpha * acc[k] + (1.0 - alpha) * e.surplus_at(k) / n -
             g.total_cost(x);
  }
  return phi;
}

BestResponseRun best_response_dynamics(const Game& g, const Profile& start,
                                       DeviationOrder order) {
  const Economy& e = g.economy();
  ProfileIndex k = e.index_of(start);
  int max_actions = 1;
  for (int i = 0; i < e.num_agents(); ++i) {
    max_actions = std::max(max_actions, e.num_actions(i));
  }
  const std::size_t cap = e.num_profiles() * e.num_agents() * max_actions;

  // Best response of agent i at k, with its gain over the current action.
  auto best_response = [&](int i, ProfileIndex at) {
    const int current = ActionAt(e, at, i);
    double best = g.payoff(i, at);
    for (int a = 0; a < e.num_actions(i); ++a) {
      best = std::max(best, g.payoff(i, Deviate(e, at, i, a)));
    }
    const double gain = best - g.payoff(i, at);
    if (gain <= kTolerance) return std::make_pair(current, 0.0);
    for (int a = 0; a < e.num_actions(i); ++a) {
      if (g.payoff(i, Deviate(e, at, i, a)) >= best - kTolerance) {
        return std::make_pair(a, gain);
      }
    }
    return std::make_pair(current, 0.0);
  };

  BestResponseRun run;
  while (true) {
    bool moved = false;
    if (order == DeviationOrder::kRoundRobin) {
      for (int i = 0; i < e.num_agents(); ++i) {
        const auto [action, gain] = best_response(i, k);
        if (gain <= 0.0) continue;
        k = Deviate(e, k, i, action);
        moved = true;
        if (++run.steps >= cap) {
          run.profile = e.profile_at(k);
          return run;
        }
      }
    } else {
      int mover = -1;
      int target = 0;
      double top = 0.0;
      for (int i = 0; i < e.num_agents(); ++i) {
        const auto [action, gain] = best_response(i, k);
        if (gain > top + kTolerance) {
          mover = i;
          target = action;
          top = gain;
        }
      }
      if (mover >= 0) {
        k = Deviate(e, k, mover, target);
        moved = true;
        if (++run.steps >= cap) {
          run.profile = e.profile_at(k);
          return run;
        }
      }
    }
    if (!moved) break;
  }
  run.profile = e.profile_at(k);
  run.converged = true;
  return run;
}

std::optional<DeviationCycle> find_deviation_cycle(const Game& g,
                                                   int max_len) {
  if (max_len < 2) return std::nullopt;
  const Economy& e = g.economy();
  int count = 0;
  const std::vector<int> comp = ImprovementComponents(g, &count);
  std::vector<int> comp_size(count, 0);
  for (int c : comp) ++comp_size[c];

  std::optional<DeviationCycle> best;
  for (ProfileIndex s = 0; s < e.num_profiles(); ++s) {
    if (comp_size[comp[s]] < 2) continue;
    // Shortest cycle through s: BFS inside its component back to s.
    std::vector<long long> parent(e.num_profiles(), -1);
    std::vector<int> via(e.num_profiles(), -1);
    std::vector<int> depth(e.num_profiles(), -1);
    std::deque<ProfileIndex> queue{s};
    depth[s] = 0;
    std::optional<std::pair<ProfileIndex, int>> closing;
    while (!queue.empty() && !closing) {
      const ProfileIndex v = queue.front();
      queue.pop_front();
      if (depth[v] + 1 > max_len) break;
      for (const auto& [w, agent] : ImprovingMoves(g, v)) {
        if (comp[w] != comp[s]) continue;
        if (w == s) {
          closing = std::make_pair(v, agent);
          break;
        }
        if (depth[w] >= 0) continue;
        depth[w] = depth[v] + 1;
        parent[w] = static_cast<long long>(v);
        via[w] = agent;
        queue.push_back(w);
      }
    }
    if (!closing) continue;
    const int length = depth[closing->first] + 1;
    if (best && static_cast<int>(best->profiles.size()) <= length) continue;
    DeviationCycle cycle;
    std::vector<ProfileIndex> path;
    std::vector<int> movers;
    for (ProfileIndex v = closing->first; v != s;
         v = static_cast<ProfileIndex>(parent[v])) {
      path.push_back(v);
      movers.push_back(via[v]);
    }
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    std::reverse(movers.begin(), movers.end());
    movers.push_back(closing->second);
    for (ProfileIndex v : path) cycle.profiles.push_back(e.profile_at(v));
    cycle.deviators = movers;
    cycle.excess_sum = cycle_excess_sum(g, cycle.profiles, cycle.deviators);
    best = std::move(cycle);
  }
  return best;
}

double cycle_excess_sum(const Game& g, const std::vector<Profile>& cycle,
                        const std::vector<int>& deviators) {
  const Economy& e = g.economy();
  if (cycle.size() < 2 || cycle.size() != deviators.size()) {
    throw InvalidArgument(
        "a cycle needs at least two profiles and one deviator per step");
  }
  double sum = 0.0;
  for (std::size_t l = 0; l < cycle.size(); ++l) {
    const Profile& from = cycle[l];
    const Profile& to = cycle[(l + 1) % cycle.size()];
    const int j = deviators[l];
    e.ValidateAgent(j);
    e.Validate(from);
    e.Validate(to);
    for (int i = 0; i < e.num_agents(); ++i) {
      if (i != j && from[i] != to[i]) {
        throw InvalidArgument("step " + std::to_string(l + 1) + " from " +
                              e.Format(from) + " to " + e.Format(to) +
                              " is not a unilateral move by agent '" +
                              e.agent_names()[j] + "'");
      }
    }
    sum += g.payoff(j, to) - g.payoff(j, from);
  }
  return sum;
}

void enumerate_unilateral_cycles(
    const Game& g, int max_len,
    const std::function<bool(const std::vector<Profile>&,
                             const std::vector<int>&)>& visit) {
  const Economy& e = g.economy();
  std::vector<ProfileIndex> path;
  std::vector<int> movers;
  std::vector<bool> on_path(e.num_profiles(), false);
  bool stop = false;

  auto emit = [&](int closing_agent) {
    std::vector<Profile> profiles;
    for (ProfileIndex v : path) profiles.push_back(e.profile_at(v));
    std::vector<int> deviators = movers;
    deviators.push_back(closing_agent);
    if (!visit(profiles, deviators)) stop = true;
  };

  std::function<void(ProfileIndex)> extend = [&](ProfileIndex v) {
    const ProfileIndex s = path.front();
    for (int i = 0; i < e.num_agents() && !stop; ++i) {
      for (int a = 0; a < e.num_actions(i) && !stop; ++a) {
        if (a == ActionAt(e, v, i)) continue;
        const ProfileIndex w = Deviate(e, v, i, a);
        if (w == s && path.size() >= 2) {
          emit(i);
          continue;
        }
        if (w <= s || on_path[w] ||
            static_cast<int>(path.size()) >= max_len) {
          continue;
        }
        path.push_back(w);
        movers.push_back(i);
        on_path[w] = true;
        extend(w);
        on_path[w] = false;
        movers.pop_back();
        path.pop_back();
      }
    }
  };

  for (ProfileIndex s = 0; s < e.num_profiles() && !stop; ++s) {
    path.assign(1, s);
    movers.clear();
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
}

ParetoReport pareto_analysis(const Game& g) {
  ParetoReport report;
  report.efficient.resize(g.num_profiles());
  report.dominator.resize(g.num_profiles());
  for (ProfileIndex k = 0; k < g.num_profiles(); ++k) {
    const auto dom = Dominator(g, k);
    report.efficient[k] = !dom.has_value();
    if (dom) report.dominator[k] = g.economy().profile_at(*dom);
  }
  return report;
}

std::optional<Profile> pareto_dominator(const Game& g, const Profile& x) {
  const auto dom = Dominator(g, g.economy().index_of(x));
  if (!dom) return std::nullopt;
  return g.economy().profile_at(*dom);
}

EquilibriumReport solve(const Game& g) {
  EquilibriumReport report;
  std::vector<double> phi;
  if (g.scheme_generated()) {
    phi = exact_potential(g);
    report.has_potential = true;
  }
  for (Profile& x : pure_nash(g)) {
    EquilibriumEntry entry;
    entry.payoffs = g.payoffs(x);
    entry.dominator = pareto_dominator(g, x);
    entry.pareto_efficient = !entry.dominator.has_value();
    if (report.has_potential) {
      entry.potential = phi[g.economy().index_of(x)];
    }
    entry.profile = std::move(x);
    report.equilibria.push_back(std::move(entry));
  }
  if (report.has_potential) {
    std::stable_sort(report.equilibria.begin(), report.equilibria.end(),
                     [](const EquilibriumEntry& a, const EquilibriumEntry& b) {
                       return *a.potential > *b.potential + kTolerance;
                     });
  }
  return report;
}

FairnessAudit audit_fairness(const Economy& e, const CustomTable& table) {
  CheckApplicable(e, PayScheme::MakeCustom(table));
  const int n = e.num_agents();
  FairnessAudit audit;
  int le_notes = 0, un_notes = 0, sym_notes = 0, mg_notes = 0;
  auto note = [&](int& counter, const std::string& msg) {
    if (counter++ < kMaxDiagnosticsPerAxiom) audit.diagnostics.push_back(msg);
  };
  auto fmt = [](double v) {
    std::ostringstream os;
    os << v;
    return os.str();
  };

  // Local efficiency.
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    const Payoffs& v = table.payoffs[k];
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    if (std::abs(sum - e.surplus_at(k)) > kTolerance) {
      audit.local_efficiency = false;
      note(le_notes, "local efficiency: payoffs at " +
                         e.Format(e.profile_at(k)) + " sum to " + fmt(sum) +
                         ", surplus is " + fmt(e.surplus_at(k)));
    }
  }

  // Unproductivity.
  for (int i = 0; i < n; ++i) {
    if (!is_unproductive(e, i)) continue;
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      if (std::abs(table.payoffs[k][i]) > kTolerance) {
        audit.unproductivity = false;
        note(un_notes, "unproductivity: unproductive agent '" +
                           e.agent_names()[i] + "' is paid " +
                           fmt(table.payoffs[k][i]) + " at " +
                           e.Format(e.profile_at(k)));
      }
    }
  }

  // Symmetry under transpositions that leave f^x unchanged.
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    const Profile x = e.profile_at(k);
    const ActiveSet act = active_set(e, x);
    if (act.size() < 2) continue;
    const RestrictedSurplus original = permute_surplus(e, x, [&] {
      std::vector<int> id(n);
      std::iota(id.begin(), id.end(), 0);
      return id;
    }());
    for (int a = 0; a < act.size(); ++a) {
      for (int b = a + 1; b < act.size(); ++b) {
        const int i = act.members[a];
        const int j = act.members[b];
        std::vector<int> swap(n);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[i], swap[j]);
        const RestrictedSurplus permuted = permute_surplus(e, x, swap);
        bool invariant = true;
        for (std::size_t m = 0; m < permuted.size() && invariant; ++m) {
          invariant =
              std::abs(permuted[m].second - original[m].second) <= kTolerance;
        }
        if (!invariant) continue;
        const double pi = table.payoffs[k][i];
        const double pj = table.payoffs[k][j];
        if (std::abs(pi - pj) > kTolerance) {
          audit.symmetry = false;
          note(sym_notes, "symmetry: agents '" + e.agent_names()[i] +
                              "' and '" + e.agent_names()[j] +
                              "' are interchangeable at " + e.Format(x) +
                              " but paid " + fmt(pi) + " and " + fmt(pj));
        }
      }
    }
  }

  // Marginality by pairwise comparison of profiles with equal active sets.
  std::vector<std::vector<ProfileIndex>> groups(std::size_t{1} << std::min(n, 20));
  if (n <= 20) {
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      std::size_t mask = 0;
      for (int i : active_set(e, e.profile_at(k)).members) {
        mask |= std::size_t{1} << i;
      }
      groups[mask].push_back(k);
    }
  }
  for (const auto& group : groups) {
    if (group.size() < 2) continue;
    // Marginal-contribution vectors per profile and agent, coalitions
    // enumerated in the same bitmask order for every member of the group.
    std::vector<std::vector<std::vector<double>>> mc(group.size());
    for (std::size_t g = 0; g < group.size(); ++g) {
      std::vector<int> active;
      const auto sub =
          internal::SubProfileIndices(e, e.profile_at(group[g]), &active);
      mc[g].assign(n, {});
      for (int b = 0; b < static_cast<int>(active.size()); ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t mask = 0; mask < sub.size(); ++mask) {
          if (mask & bit) continue;
          mc[g][active[b]].push_back(e.surplus_at(sub[mask | bit]) -
                                     e.surplus_at(sub[mask]));
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < group.size(); ++p) {
        for (std::size_t q = 0; q < group.size(); ++q) {
          if (p == q) continue;
          bool dominates = true;
          for (std::size_t c = 0; c < mc[p][i].size() && dominates; ++c) {
            dominates = mc[p][i][c] >= mc[q][i][c] - kTolerance;
          }
          if (!dominates) continue;
          const double pay_p = table.payoffs[group[p]][i];
          const double pay_q = table.payoffs[group[q]][i];
          if (pay_p < pay_q - kTolerance) {
            audit.marginality = false;
            note(mg_notes,
                 "marginality: agent '" + e.agent_names()[i] +
                     "' contributes at least as much at " +
                     e.Format(e.profile_at(group[p])) + " as at " +
                     e.Format(e.profile_at(group[q])) + " but is paid " +
                     fmt(pay_p) + " < " + fmt(pay_q));
          }
        }
      }
    }
  }

  // Pointwise comparison with Shapley pay.
  if (std::abs(e.surplus_at(e.reference_index())) > kTolerance) {
    audit.fair = false;
    audit.diagnostics.push_back(
        "surplus at the reference profile is nonzero; no fair scheme applies");
    return audit;
  }
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    const Payoffs sh = shapley_pay(e, e.profile_at(k));
    for (int i = 0; i < n; ++i) {
      audit.max_shapley_deviation =
          std::max(audit.max_shapley_deviation,
                   std::abs(sh[i] - table.payoffs[k][i]));
    }
  }
  audit.fair = audit.max_shapley_deviation <= kTolerance;
  return audit;
}

}  // namespace fairgame
