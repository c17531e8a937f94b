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

#ifndef FAIRGAME_ECONOMY_H_
#define FAIRGAME_ECONOMY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fairgame {

// Global comparison tolerance for equality tests on surplus and payoffs.
inline constexpr double kTolerance = 1e-9;

// One action index per agent.
using Profile = std::vector<int>;

// Position of a profile in the mixed-radix enumeration of the outcome space.
// Agent 0 is the most significant digit, so index order is lexicographic
// order on profiles.
using ProfileIndex = std::size_t;

// A finite economy: agents, per-agent action lists, a reference profile and a
// surplus value for every full profile. Immutable after construction.
class Economy {
 public:
  // `surplus` is dense, indexed by ProfileIndex.
  Economy(std::vector<std::string> agent_names,
          std::vector<std::vector<std::string>> actions, Profile reference,
          std::vector<double> surplus);

  // Evaluates `f` on every profile of the product space.
  static Economy FromFunction(std::vector<std::string> agent_names,
                              std::vector<std::vector<std::string>> actions,
                              Profile reference,
                              const std::function<double(const Profile&)>& f);

  // Generic agent names "1".."n" and action labels "a0".."a{k-1}".
  static Economy Anonymous(const std::vector<int>& action_counts,
                           Profile reference, std::vector<double> surplus);

  int num_agents() const { return static_cast<int>(actions_.size()); }
  int num_actions(int agent) const;
  std::size_t num_profiles() const { return surplus_.size(); }

  const std::vector<std::string>& agent_names() const { return agent_names_; }
  const std::vector<std::string>& action_labels(int agent) const;
  const Profile& reference() const { return reference_; }
  ProfileIndex reference_index() const { return reference_index_; }

  double surplus(const Profile& x) const { return surplus_[index_of(x)]; }
  double surplus_at(ProfileIndex index) const { return surplus_[index]; }
  std::span<const double> surplus_table() const { return surplus_; }

  ProfileIndex index_of(const Profile& x) const;
  Profile profile_at(ProfileIndex index) const;

  // Place value of agent `i`'s digit in the mixed-radix index.
  std::size_t stride(int agent) const { return strides_[agent]; }

  // Throws InvalidArgument unless `x` has one valid action index per agent.
  void Validate(const Profile& x) const;
  void ValidateAgent(int agent) const;

  // Same agents, actions and surplus around another reference profile.
  Economy WithReference(Profile reference) const;
  // Same agents, actions and reference with a replacement surplus table.
  Economy WithSurplus(std::vector<double> surplus) const;

  // Agent names with actions, e.g. "(a2,b1)".
  std::string Format(const Profile& x) const;

 private:
  std::vector<std::string> agent_names_;
  std::vector<std::vector<std::string>> actions_;
  Profile reference_;
  std::vector<double> surplus_;
  std::vector<std::size_t> strides_;
  ProfileIndex reference_index_ = 0;
};

// Agents whose action differs from their reference action.
struct ActiveSet {
  std::vector<int> members;
  int size() const { return static_cast<int>(members.size()); }
  bool Contains(int agent) const;
};

ActiveSet active_set(const Economy& e, const Profile& x);

// Δ(x): every profile obtained from `x` by resetting a subset of its active
// coordinates to the reference. Ordered by the subset bitmask over the active
// members (bit k = k-th active agent kept at x), so entry 0 is the reference
// and the last entry is x itself.
std::vector<Profile> sub_profiles(const Economy& e, const Profile& x);

// Δ_o^i(x): the members of Δ(x) whose coordinate `agent` is at reference.
std::vector<Profile> sub_profiles_excluding(const Economy& e, int agent,
                                            const Profile& x);

// True iff y ∈ Δ(x), i.e. y_i = x_i or y_i = o_i for every agent.
bool is_sub_profile(const Economy& e, const Profile& y, const Profile& x);

// mc_i(f, xp, x) = f(xp_{-i}, x_i) - f(xp). Requires xp ∈ Δ_o^i(x).
double marginal_contribution(const Economy& e, int agent, const Profile& xp,
                             const Profile& x);

// True iff every marginal contribution of `agent` is zero (within tolerance).
bool is_unproductive(const Economy& e, int agent);

// Restriction of a surplus map to Δ(x), one entry per sub-profile in the
// order produced by sub_profiles().
using RestrictedSurplus = std::vector<std::pair<Profile, double>>;

// π^x f^x: y ↦ f(π^x(y)) on Δ(x). `permutation[k]` is the image of agent k;
// it must be a bijection of the agents fixing every inactive agent.
RestrictedSurplus permute_surplus(const Economy& e, const Profile& x,
                                  const std::vector<int>& permutation);

// The profile π^x(y) for y ∈ Δ(x).
Profile permute_profile(const Economy& e, const Profile& x,
                        const std::vector<int>& permutation, const Profile& y);

namespace internal {

// Mixed-radix indices of Δ(x), ordered as in sub_profiles(); also returns the
// active members used for the bitmask.
std::vector<ProfileIndex> SubProfileIndices(const Economy& e, const Profile& x,
                                            std::vector<int>* active);

}  // namespace internal

}  // namespace fairgame

#endif  // FAIRGAME_ECONOMY_H_
