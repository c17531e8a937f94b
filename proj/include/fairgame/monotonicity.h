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

#ifndef FAIRGAME_MONOTONICITY_H_
#define FAIRGAME_MONOTONICITY_H_

#include <optional>
#include <string>
#include <vector>

#include "fairgame/economy.h"
#include "fairgame/equilibrium.h"

namespace fairgame {

// Result of the decidable monotonicity criteria. A negative verdict means the
// criterion was not met; it does not prove that no monotone order exists.
struct MonotonicityVerdict {
  bool weak = false;
  // Lowest-index profile whose every coordinate is a weakly dominant action
  // of f. Such a profile maximizes f.
  std::optional<Profile> witness;

  bool strict = false;
  // orders[i] lists agent i's actions from lowest to highest surplus; set only
  // when `strict` holds.
  std::vector<std::vector<int>> orders;

  std::string method;
};

// Weak criterion: some x̄ with f(x_{-i}, x̄_i) ≥ f(x_{-i}, a) for every agent
// i, context x_{-i} and action a.
MonotonicityVerdict check_weak_monotonicity(const Economy& e);

// Strict criterion: for every agent and every pair of distinct actions one of
// them yields strictly higher surplus in every context. Also fills the weak
// fields.
MonotonicityVerdict check_strict_monotonicity(const Economy& e);

// Replays a verdict against the economy: the witness must be weakly dominant
// coordinate-wise and each order must be strictly increasing in every context.
bool verify_verdict(const Economy& e, const MonotonicityVerdict& verdict);

struct UniquenessReport {
  MonotonicityVerdict verdict;
  std::vector<Profile> equilibria;
  std::vector<Profile> efficient_equilibria;
  bool weak_claim = true;    // weak verdict ⇒ an efficient equilibrium exists
  bool strict_claim = true;  // strict verdict ⇒ one equilibrium, maximizing f
  bool passed = true;
  std::vector<std::string> notes;
};

// Solves the Shapley game of `e` and checks the efficiency and uniqueness
// consequences of whichever criteria hold. Requires f(o) = 0.
UniquenessReport verify_uniqueness(const Economy& e);

}  // namespace fairgame

#endif  // FAIRGAME_MONOTONICITY_H_
