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

#include "fairgame/social_justice.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

bool HasEfficientEquilibrium(const Game& g, const std::vector<Profile>& eqs) {
  for (const Profile& x : eqs) {
    if (!pareto_dominator(g, x)) return true;
  }
  return false;
}

}  // namespace

std::vector<AlphaSweepRow> alpha_sweep(const Economy& e,
                                       const std::vector<double>& grid,
                                       double max_terms) {
  if (grid.empty()) throw InvalidArgument("alpha grid is empty");
  std::vector<AlphaSweepRow> rows;
  for (double alpha : grid) {
    const Game g = build_game(e, PayScheme::MakeEgalitarian(alpha),
                              std::nullopt, max_terms);
    AlphaSweepRow row;
    row.alpha = alpha;
    row.equilibria = pure_nash(g);
    row.any_efficient = HasEfficientEquilibrium(g, row.equilibria);
    row.min_equilibrium_payoff = std::numeric_limits<double>::infinity();
    for (const Profile& x : row.equilibria) {
      for (double v : g.payoffs(x)) {
        row.min_equilibrium_payoff = std::min(row.min_equilibrium_payoff, v);
      }
    }
    if (row.equilibria.empty()) row.min_equilibrium_payoff = 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw InvalidArgument("grid step must be positive");
  if (!(hi >= lo)) throw InvalidArgument("grid upper bound below lower bound");
  const long long steps =
      static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> out;
  for (long long s = 0; s <= steps; ++s) {
    out.push_back(std::min(hi, lo + static_cast<double>(s) * step));
  }
  return out;
}

Alpha0Result find_alpha0(const Economy& e, double resolution) {
  if (!(resolution > 0.0)) {
    throw InvalidArgument("resolution must be positive");
  }
  Alpha0Result result;
  for (double alpha : make_grid(0.0, 1.0, resolution)) {
    const Game g = build_game(e, PayScheme::MakeEgalitarian(alpha));
    if (!HasEfficientEquilibrium(g, pure_nash(g))) {
      result.first_failure = alpha;
      return result;
    }
    result.alpha0 = alpha;
  }
  return result;
}

NonnegativityResult check_nonnegativity(const Economy& e, double alpha) {
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    if (e.surplus_at(k) < -kTolerance) {
      throw PreconditionError("surplus is negative at " +
                              e.Format(e.profile_at(k)));
    }
  }
  const Game g = build_game(e, PayScheme::MakeEgalitarian(alpha));
  NonnegativityResult result;
  for (const Profile& x : pure_nash(g)) {
    const Payoffs v = g.payoffs(x);
    for (int i = 0; i < g.num_agents(); ++i) {
      if (v[i] < -kTolerance) {
        result.nonnegative = false;
        result.witness = x;
        result.agent = i;
        return result;
      }
    }
  }
  return result;
}

ReferenceCertificate certify_reference(const Economy& e,
                                       const Profile& reference, double alpha) {
  const Economy moved = e.WithReference(reference);
  const Game g = build_game(moved, PayScheme::MakeShifted(alpha));
  const ProfileIndex k = moved.reference_index();
  ReferenceCertificate cert;
  cert.reference = reference;
  cert.surplus = moved.surplus_at(k);
  const auto at = g.payoffs(k);
  cert.payoffs.assign(at.begin(), at.end());
  cert.max_deviation_gain = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < moved.num_agents(); ++i) {
    for (int a = 0; a < moved.num_actions(i); ++a) {
      if (a == reference[i]) continue;
      Profile y = reference;
      y[i] = a;
      cert.max_deviation_gain =
          std::max(cert.max_deviation_gain, g.payoff(i, y) - at[i]);
    }
  }
  if (!std::isfinite(cert.max_deviation_gain)) cert.max_deviation_gain = 0.0;
  cert.certified = cert.max_deviation_gain <= kTolerance;
  return cert;
}

ReferenceCertificate optimal_reference(const Economy& e, double alpha) {
  const auto table = e.surplus_table();
  const auto best = std::max_element(table.begin(), table.end());
  if (!(*best > 0.0)) {
    throw PreconditionError(
        "maximum surplus must be positive to move the reference point");
  }
  const ProfileIndex k = static_cast<ProfileIndex>(best - table.begin());
  return certify_reference(e, e.profile_at(k), alpha);
}

}  // namespace fairgame
