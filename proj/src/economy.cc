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

#include "fairgame/economy.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fairgame/errors.h"

namespace fairgame {

Economy::Economy(std::vector<std::string> agent_names,
                 std::vector<std::vector<std::string>> actions,
                 Profile reference, std::vector<double> surplus)
    : agent_names_(std::move(agent_names)),
      actions_(std::move(actions)),
      reference_(std::move(reference)),
      surplus_(std::move(surplus)) {
  const int n = static_cast<int>(actions_.size());
  if (n == 0) throw InvalidArgument("economy needs at least one agent");
  if (static_cast<int>(agent_names_.size()) != n) {
    throw InvalidArgument("agent name count does not match action lists");
  }
  strides_.assign(n, 1);
  std::size_t total = 1;
  for (int i = n - 1; i >= 0; --i) {
    if (actions_[i].empty()) {
      throw InvalidArgument("agent '" + agent_names_[i] + "' has no actions");
    }
    strides_[i] = total;
    total *= actions_[i].size();
  }
  if (surplus_.size() != total) {
    throw InvalidArgument("surplus table has " +
                          std::to_string(surplus_.size()) +
                          " entries, expected " + std::to_string(total));
  }
  Validate(reference_);
  reference_index_ = index_of(reference_);
}

Economy Economy::FromFunction(std::vector<std::string> agent_names,
                              std::vector<std::vector<std::string>> actions,
                              Profile reference,
                              const std::function<double(const Profile&)>& f) {
  std::size_t total = 1;
  for (const auto& a : actions) total *= a.size();
  Economy e(std::move(agent_names), std::move(actions), std::move(reference),
            std::vector<double>(total, 0.0));
  for (ProfileIndex k = 0; k < total; ++k) e.surplus_[k] = f(e.profile_at(k));
  return e;
}

Economy Economy::Anonymous(const std::vector<int>& action_counts,
                           Profile reference, std::vector<double> surplus) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> actions;
  for (std::size_t i = 0; i < action_counts.size(); ++i) {
    names.push_back(std::to_string(i + 1));
    std::vector<std::string> labels;
    for (int a = 0; a < action_counts[i]; ++a) {
      labels.push_back("a" + std::to_string(a));
    }
    actions.push_back(std::move(labels));
  }
  return Economy(std::move(names), std::move(actions), std::move(reference),
                 std::move(surplus));
}

int Economy::num_actions(int agent) const {
  ValidateAgent(agent);
  return static_cast<int>(actions_[agent].size());
}

const std::vector<std::string>& Economy::action_labels(int agent) const {
  ValidateAgent(agent);
  return actions_[agent];
}

void Economy::ValidateAgent(int agent) const {
  if (agent < 0 || agent >= num_agents()) {
    throw InvalidArgument("agent index " + std::to_string(agent) +
                          " out of range");
  }
}

void Economy::Validate(const Profile& x) const {
  if (static_cast<int>(x.size()) != num_agents()) {
    throw InvalidArgument("profile has " + std::to_string(x.size()) +
                          " coordinates, economy has " +
                          std::to_string(num_agents()) + " agents");
  }
  for (int i = 0; i < num_agents(); ++i) {
    if (x[i] < 0 || x[i] >= static_cast<int>(actions_[i].size())) {
      throw InvalidArgument("action index " + std::to_string(x[i]) +
                            " invalid for agent '" + agent_names_[i] + "'");
    }
  }
}

ProfileIndex Economy::index_of(const Profile& x) const {
  Validate(x);
  ProfileIndex k = 0;
  for (int i = 0; i < num_agents(); ++i) k += strides_[i] * x[i];
  return k;
}

Profile Economy::profile_at(ProfileIndex index) const {
  if (index >= surplus_.size()) {
    throw InvalidArgument("profile index out of range");
  }
  Profile x(num_agents());
  for (int i = 0; i < num_agents(); ++i) {
    x[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return x;
}

Economy Economy::WithReference(Profile reference) const {
  return Economy(agent_names_, actions_, std::move(reference), surplus_);
}

Economy Economy::WithSurplus(std::vector<double> surplus) const {
  return Economy(agent_names_, actions_, reference_, std::move(surplus));
}

std::string Economy::Format(const Profile& x) const {
  Validate(x);
  std::string out = "(";
  for (int i = 0; i < num_agents(); ++i) {
    if (i > 0) out += ",";
    out += actions_[i][x[i]];
  }
  return out + ")";
}

bool ActiveSet::Contains(int agent) const {
  return std::find(members.begin(), members.end(), agent) != members.end();
}

ActiveSet active_set(const Economy& e, const Profile& x) {
  e.Validate(x);
  ActiveSet s;
  for (int i = 0; i < e.num_agents(); ++i) {
    if (x[i] != e.reference()[i]) s.members.push_back(i);
  }
  return s;
}

namespace internal {

std::vector<ProfileIndex> SubProfileIndices(const Economy& e, const Profile& x,
                                            std::vector<int>* active) {
  std::vector<int> members = active_set(e, x).members;
  const int k = static_cast<int>(members.size());
  if (k >= 63) throw SizeCapExceeded("active set too large to enumerate");
  // Offset each active agent contributes when switched on.
  std::vector<std::ptrdiff_t> delta(k);
  for (int b = 0; b < k; ++b) {
    const int i = members[b];
    delta[b] = static_cast<std::ptrdiff_t>(e.stride(i)) *
               (x[i] - e.reference()[i]);
  }
  std::vector<ProfileIndex> out(std::size_t{1} << k);
  out[0] = e.reference_index();
  for (std::size_t mask = 1; mask < out.size(); ++mask) {
    const int low = std::countr_zero(mask);
    out[mask] = static_cast<ProfileIndex>(
        static_cast<std::ptrdiff_t>(out[mask & (mask - 1)]) + delta[low]);
  }
  if (active != nullptr) *active = std::move(members);
  return out;
}

}  // namespace internal

std::vector<Profile> sub_profiles(const Economy& e, const Profile& x) {
  std::vector<Profile> out;
  for (ProfileIndex k : internal::SubProfileIndices(e, x, nullptr)) {
    out.push_back(e.profile_at(k));
  }
  return out;
}

std::vector<Profile> sub_profiles_excluding(const Economy& e, int agent,
                                            const Profile& x) {
  e.ValidateAgent(agent);
  std::vector<Profile> out;
  for (Profile& y : sub_profiles(e, x)) {
    if (y[agent] == e.reference()[agent]) out.push_back(std::move(y));
  }
  return out;
}

bool is_sub_profile(const Economy& e, const Profile& y, const Profile& x) {
  e.Validate(x);
  e.Validate(y);
  for (int i = 0; i < e.num_agents(); ++i) {
    if (y[i] != x[i] && y[i] != e.reference()[i]) return false;
  }
  return true;
}

double marginal_contribution(const Economy& e, int agent, const Profile& xp,
                             const Profile& x) {
  e.ValidateAgent(agent);
  if (!is_sub_profile(e, xp, x) || xp[agent] != e.reference()[agent]) {
    throw PreconditionError(e.Format(xp) + " is not in Δ_o^" +
                            e.agent_names()[agent] + "(" + e.Format(x) + ")");
  }
  Profile with = xp;
  with[agent] = x[agent];
  return e.surplus(with) - e.surplus(xp);
}

bool is_unproductive(const Economy& e, int agent) {
  e.ValidateAgent(agent);
  const int ref = e.reference()[agent];
  const std::size_t stride = e.stride(agent);
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    const int xi = static_cast<int>((k / stride) % e.num_actions(agent));
    if (xi != ref) continue;
    const double base = e.surplus_at(k);
    for (int a = 0; a < e.num_actions(agent); ++a) {
      if (a == ref) continue;
      const ProfileIndex moved = k + stride * a - stride * ref;
      if (std::abs(e.surplus_at(moved) - base) > kTolerance) return false;
    }
  }
  return true;
}

Profile permute_profile(const Economy& e, const Profile& x,
                        const std::vector<int>& permutation, const Profile& y) {
  const int n = e.num_agents();
  if (static_cast<int>(permutation.size()) != n) {
    throw InvalidArgument("permutation size does not match agent count");
  }
  const ActiveSet active = active_set(e, x);
  std::vector<bool> seen(n, false);
  for (int k = 0; k < n; ++k) {
    const int j = permutation[k];
    if (j < 0 || j >= n || seen[j]) {
      throw InvalidArgument("permutation is not a bijection of the agents");
    }
    seen[j] = true;
    if (!active.Contains(k) && j != k) {
      throw InvalidArgument("permutation moves inactive agent '" +
                            e.agent_names()[k] + "'");
    }
  }
  if (!is_sub_profile(e, y, x)) {
    throw InvalidArgument(e.Format(y) + " is not a sub-profile of " +
                          e.Format(x));
  }
  Profile out(n);
  for (int k = 0; k < n; ++k) {
    const int j = permutation[k];
    out[j] = (y[k] != e.reference()[k]) ? x[j] : e.reference()[j];
  }
  return out;
}

RestrictedSurplus permute_surplus(const Economy& e, const Profile& x,
                                  const std::vector<int>& permutation) {
  RestrictedSurplus out;
  for (Profile& y : sub_profiles(e, x)) {
    const double value = e.surplus(permute_profile(e, x, permutation, y));
    out.emplace_back(std::move(y), value);
  }
  return out;
}

}  // namespace fairgame
