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

#include "fairgame/exchange.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

bool SameBundle(const Bundle& a, const Bundle& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > kTolerance) return false;
  }
  return true;
}

void ValidateSpec(const ExchangeSpec& spec) {
  const std::size_t n = spec.agent_names.size();
  if (n == 0) throw InvalidArgument("exchange economy needs agents");
  if (spec.goods < 1) throw InvalidArgument("exchange economy needs goods");
  if (spec.endowments.size() != n || spec.consumption_sets.size() != n ||
      spec.utilities.size() != n) {
    throw InvalidArgument(
        "endowments, consumption sets and utilities need one entry per agent");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!spec.utilities[i]) {
      throw InvalidArgument("missing utility for agent '" +
                            spec.agent_names[i] + "'");
    }
    if (spec.endowments[i].size() != static_cast<std::size_t>(spec.goods)) {
      throw InvalidArgument("endowment of agent '" + spec.agent_names[i] +
                            "' has the wrong number of goods");
    }
    bool found = false;
    for (const Bundle& b : spec.consumption_sets[i]) {
      if (b.size() != static_cast<std::size_t>(spec.goods)) {
        throw InvalidArgument("bundle " + BundleLabel(b) + " of agent '" +
                              spec.agent_names[i] +
                              "' has the wrong number of goods");
      }
      found = found || SameBundle(b, spec.endowments[i]);
    }
    if (!found) {
      throw InvalidArgument("endowment " + BundleLabel(spec.endowments[i]) +
                            " of agent '" + spec.agent_names[i] +
                            "' is not in its consumption set");
    }
  }
}

}  // namespace

std::string BundleLabel(const Bundle& b) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k > 0) os << ",";
    os << b[k];
  }
  os << ")";
  return os.str();
}

std::vector<Bundle> ExchangeEconomy::Allocation(const Profile& x) const {
  economy_.Validate(x);
  if (spec_.decisions) {
    std::vector<Bundle> out = spec_.decisions->allocation(x);
    if (out.size() != spec_.agent_names.size()) {
      throw InvalidArgument("decision layer returned a malformed allocation");
    }
    return out;
  }
  std::vector<Bundle> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(spec_.consumption_sets[i][x[i]]);
  }
  return out;
}

bool ExchangeEconomy::IsFeasible(const Profile& x) const {
  const std::vector<Bundle> alloc = Allocation(x);
  for (int k = 0; k < spec_.goods; ++k) {
    double used = 0.0;
    double owned = 0.0;
    for (std::size_t i = 0; i < alloc.size(); ++i) {
      used += alloc[i][k];
      owned += spec_.endowments[i][k];
    }
    if (used > owned + kTolerance) return false;
  }
  return true;
}

double ExchangeEconomy::RawUtility(int agent, const Profile& x) const {
  economy_.ValidateAgent(agent);
  return spec_.utilities[agent](Allocation(x)[agent]);
}

ExchangeEconomy build_exchange_economy(ExchangeSpec spec) {
  ValidateSpec(spec);
  const int n = static_cast<int>(spec.agent_names.size());
  std::vector<double> base(n);
  for (int i = 0; i < n; ++i) base[i] = spec.utilities[i](spec.endowments[i]);

  std::vector<std::vector<std::string>> actions;
  Profile reference(n, 0);
  if (spec.decisions) {
    const DecisionLayer& d = *spec.decisions;
    if (d.labels.size() != static_cast<std::size_t>(n) || !d.allocation) {
      throw InvalidArgument("decision layer needs labels for every agent");
    }
    actions = d.labels;
    reference = d.reference;
    const std::vector<Bundle> at_ref = d.allocation(reference);
    for (int i = 0; i < n; ++i) {
      if (!SameBundle(at_ref[i], spec.endowments[i])) {
        throw InvalidArgument(
            "the reference decision does not leave agent '" +
            spec.agent_names[i] + "' at its endowment");
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> labels;
      for (std::size_t a = 0; a < spec.consumption_sets[i].size(); ++a) {
        const Bundle& b = spec.consumption_sets[i][a];
        labels.push_back(BundleLabel(b));
        if (SameBundle(b, spec.endowments[i])) {
          reference[i] = static_cast<int>(a);
        }
      }
      actions.push_back(std::move(labels));
    }
  }

  std::size_t total = 1;
  for (const auto& a : actions) total *= a.size();
  Economy shell(spec.agent_names, actions, reference,
                std::vector<double>(total, 0.0));
  ExchangeEconomy ex(std::move(shell), std::move(spec));
  std::vector<double> surplus(total);
  for (ProfileIndex k = 0; k < total; ++k) {
    const Profile x = ex.economy_.profile_at(k);
    const std::vector<Bundle> alloc = ex.Allocation(x);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += ex.spec_.utilities[i](alloc[i]) - base[i];
    }
    surplus[k] = sum;
  }
  ex.economy_ = ex.economy_.WithSurplus(std::move(surplus));
  return ex;
}

ExchangeOutcome solve_exchange(const ExchangeEconomy& ex,
                               const PayScheme& scheme) {
  const Economy& e = ex.economy();
  const Game g = build_game(e, scheme);
  ExchangeOutcome out;
  std::vector<bool> feasible(e.num_profiles());
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    feasible[k] = ex.IsFeasible(e.profile_at(k));
  }

  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    if (!feasible[k]) continue;
    const Profile x = e.profile_at(k);
    if (is_pure_nash(g, x)) out.feasible_nash.push_back(x);
    bool stable = true;
    for (int i = 0; i < e.num_agents() && stable; ++i) {
      for (int a = 0; a < e.num_actions(i) && stable; ++a) {
        Profile y = x;
        y[i] = a;
        const ProfileIndex ky = e.index_of(y);
        if (feasible[ky] && g.payoff(i, ky) > g.payoff(i, k) + kTolerance) {
          stable = false;
        }
      }
    }
    if (stable) out.constrained_nash.push_back(x);
  }

  if (g.scheme_generated()) {
    const std::vector<double> phi = exact_potential(g);
    double best = 0.0;
    bool any = false;
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      if (!feasible[k]) continue;
      if (!any || phi[k] > best) best = phi[k];
      any = true;
    }
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      if (feasible[k] && phi[k] >= best - kTolerance) {
        out.fair_outcomes.push_back(e.profile_at(k));
      }
    }
  }
  return out;
}

}  // namespace fairgame
