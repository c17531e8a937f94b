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

#ifndef FAIRGAME_SOCIAL_JUSTICE_H_
#define FAIRGAME_SOCIAL_JUSTICE_H_

#include <optional>
#include <vector>

#include "fairgame/economy.h"
#include "fairgame/equilibrium.h"
#include "fairgame/pay_schemes.h"

namespace fairgame {

struct AlphaSweepRow {
  double alpha = 0.0;
  std::vector<Profile> equilibria;
  bool any_efficient = false;
  double min_equilibrium_payoff = 0.0;
};

// Solves the egalitarian game at each alpha of `grid`. Throws InvalidArgument
// on an empty grid or alpha outside [0, 1], PreconditionError if f(o) ≠ 0.
std::vector<AlphaSweepRow> alpha_sweep(
    const Economy& e, const std::vector<double>& grid,
    double max_terms = kDefaultMaxShapleyTerms);

// {lo, lo+step, ..., hi} with integer stepping; hi is included when it lies on
// the grid up to rounding.
std::vector<double> make_grid(double lo, double hi, double step);

struct Alpha0Result {
  // Largest grid value ᾱ such that every grid alpha ≤ ᾱ admits a
  // Pareto-efficient equilibrium.
  double alpha0 = 0.0;
  // First grid value that fails, if any. The true threshold lies in
  // [alpha0, first_failure).
  std::optional<double> first_failure;
};

// Scans {0, r, 2r, ...} ∩ [0, 1]. Throws InvalidArgument unless r > 0.
Alpha0Result find_alpha0(const Economy& e, double resolution = 0.01);

struct NonnegativityResult {
  bool nonnegative = true;
  std::optional<Profile> witness;  // equilibrium with a negative payoff
  int agent = -1;
};

// Checks that every equilibrium payoff of the egalitarian game is ≥ -ε.
// Throws PreconditionError naming a profile with negative surplus.
NonnegativityResult check_nonnegativity(const Economy& e, double alpha);

struct ReferenceCertificate {
  Profile reference;
  double surplus = 0.0;             // f at the new reference
  Payoffs payoffs;                  // payoffs at the reference, f/n each
  double max_deviation_gain = 0.0;  // best unilateral gain, ≤ 0 when certified
  bool certified = false;
};

// Checks that `reference` is a pure Nash equilibrium of the shifted
// egalitarian game of `e` rebuilt around it. Requires f(reference) > 0.
ReferenceCertificate certify_reference(const Economy& e,
                                       const Profile& reference, double alpha);

// Moves the reference to the lowest-index maximizer of f and certifies it.
// Throws PreconditionError when max f ≤ 0.
ReferenceCertificate optimal_reference(const Economy& e, double alpha);

}  // namespace fairgame

#endif  // FAIRGAME_SOCIAL_JUSTICE_H_
