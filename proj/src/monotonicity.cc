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

#include "fairgame/monotonicity.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fairgame {
namespace {

// Profiles whose coordinate `agent` is its first action: one per context.
std::vector<ProfileIndex> Contexts(const Economy& e, int agent) {
  const std::size_t stride = e.stride(agent);
  const int m = e.num_actions(agent);
  std::vector<ProfileIndex> out;
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    if ((k / stride) % m == 0) out.push_back(k);
  }
  return out;
}

// Actions of `agent` that are weakly best in every context.
std::vector<int> DominantActions(const Economy& e, int agent) {
  const std::size_t stride = e.stride(agent);
  const int m = e.num_actions(agent);
  std::vector<bool> ok(m, true);
  for (ProfileIndex base : Contexts(e, agent)) {
    double best = e.surplus_at(base);
    for (int a = 1; a < m; ++a) best = std::max(best, e.surplus_at(base + stride * a));
    for (int a = 0; a < m; ++a) {
      if (e.surplus_at(base + stride * a) < best - kTolerance) ok[a] = false;
    }
  }
  std::vector<int> out;
  for (int a = 0; a < m; ++a) {
    if (ok[a]) out.push_back(a);
  }
  return out;
}

// +1 if b beats a in every context, -1 if a beats b in every context, else 0.
int UniformDirection(const Economy& e, int agent, int a, int b,
                     const std::vector<ProfileIndex>& contexts) {
  const std::size_t stride = e.stride(agent);
  bool up = true;
  bool down = true;
  for (ProfileIndex base : contexts) {
    const double fa = e.surplus_at(base + stride * a);
    const double fb = e.surplus_at(base + stride * b);
    if (!(fa < fb - kTolerance)) up = false;
    if (!(fb < fa - kTolerance)) down = false;
    if (!up && !down) return 0;
  }
  return up ? 1 : (down ? -1 : 0);
}

}  // namespace

MonotonicityVerdict check_weak_monotonicity(const Economy& e) {
  MonotonicityVerdict v;
  Profile witness(e.num_agents());
  for (int i = 0; i < e.num_agents(); ++i) {
    const std::vector<int> dom = DominantActions(e, i);
    if (dom.empty()) {
      v.method = "weak criterion not met: agent '" + e.agent_names()[i] +
                 "' has no weakly dominant action";
      return v;
    }
    witness[i] = dom.front();
  }
  v.weak = true;
  v.witness = witness;
  v.method = "weak: coordinate-wise weakly dominant maximizer " +
             e.Format(witness);
  return v;
}

MonotonicityVerdict check_strict_monotonicity(const Economy& e) {
  MonotonicityVerdict v = check_weak_monotonicity(e);
  const std::string weak_method = v.method;
  std::vector<std::vector<int>> orders;
  for (int i = 0; i < e.num_agents(); ++i) {
    const int m = e.num_actions(i);
    const std::vector<ProfileIndex> contexts = Contexts(e, i);
    // less[a][b]: a yields strictly less than b in every context.
    std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const int dir = UniformDirection(e, i, a, b, contexts);
        if (dir == 0) {
          v.method = weak_method + "; strict criterion not met: actions '" +
                     e.action_labels(i)[a] + "' and '" +
                     e.action_labels(i)[b] + "' of agent '" +
                     e.agent_names()[i] + "' are not uniformly ordered";
          return v;
        }
        (dir > 0 ? less[a][b] : less[b][a]) = true;
      }
    }
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return less[a][b]; });
    orders.push_back(std::move(order));
  }
  v.strict = true;
  v.orders = std::move(orders);
  v.method = weak_method + "; strict: uniform pairwise dominance";
  return v;
}

bool verify_verdict(const Economy& e, const MonotonicityVerdict& verdict) {
  if (verdict.strict && !verdict.weak) return false;
  if (verdict.weak) {
    if (!verdict.witness) return false;
    const Profile& w = *verdict.witness;
    e.Validate(w);
    for (int i = 0; i < e.num_agents(); ++i) {
      const std::size_t stride = e.stride(i);
      for (ProfileIndex base : Contexts(e, i)) {
        const double at = e.surplus_at(base + stride * w[i]);
        for (int a = 0; a < e.num_actions(i); ++a) {
          if (e.surplus_at(base + stride * a) > at + kTolerance) return false;
        }
      }
    }
  }
  if (verdict.strict) {
    if (static_cast<int>(verdict.orders.size()) != e.num_agents()) return false;
    for (int i = 0; i < e.num_agents(); ++i) {
      const auto& order = verdict.orders[i];
      if (static_cast<int>(order.size()) != e.num_actions(i)) return false;
      const std::vector<ProfileIndex> contexts = Contexts(e, i);
      for (std::size_t p = 0; p + 1 < order.size(); ++p) {
        if (UniformDirection(e, i, order[p], order[p + 1], contexts) != 1) {
          return false;
        }
      }
    }
  }
  return true;
}

UniquenessReport verify_uniqueness(const Economy& e) {
  UniquenessReport report;
  report.verdict = check_strict_monotonicity(e);
  const Game g = build_game(e, PayScheme::MakeShapley());
  report.equilibria = pure_nash(g);
  for (const Profile& x : report.equilibria) {
    if (!pareto_dominator(g, x)) report.efficient_equilibria.push_back(x);
  }
  if (report.verdict.weak && report.efficient_equilibria.empty()) {
    report.weak_claim = false;
    report.notes.push_back(
        "weak criterion holds but no equilibrium is Pareto-efficient");
  }
  if (report.verdict.strict) {
    const auto table = e.surplus_table();
    const double max_f = *std::max_element(table.begin(), table.end());
    if (report.equilibria.size() != 1) {
      report.strict_claim = false;
      report.notes.push_back("strict criterion holds but there are " +
                             std::to_string(report.equilibria.size()) +
                             " equilibria");
    } else if (std::abs(e.surplus(report.equilibria.front()) - max_f) >
               kTolerance) {
      report.strict_claim = false;
      report.notes.push_back("the unique equilibrium " +
                             e.Format(report.equilibria.front()) +
                             " does not maximize surplus");
    }
  }
  report.passed = report.weak_claim && report.strict_claim;
  return report;
}

}  // namespace fairgame
