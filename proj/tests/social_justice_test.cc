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

#include <gtest/gtest.h>

#include <random>

#include "fairgame/catalog.h"
#include "fairgame/errors.h"
#include "testing.h"

namespace fairgame {
namespace {

using testing::AllProfiles;

TEST(GridTest, IntegerStepping) {
  const std::vector<double> g = make_grid(0.0, 1.0, 0.1);
  ASSERT_EQ(g.size(), 11u);
  EXPECT_DOUBLE_EQ(g.back(), 1.0);
  EXPECT_EQ(make_grid(0.5, 0.5, 0.1), (std::vector<double>{0.5}));
  EXPECT_EQ(make_grid(0.0, 1.0, 0.01).size(), 101u);
  EXPECT_THROW(make_grid(0.0, 1.0, 0.0), InvalidArgument);
  EXPECT_THROW(make_grid(1.0, 0.0, 0.1), InvalidArgument);
}

TEST(AlphaSweepTest, TaxEconomy) {
  const auto rows = alpha_sweep(catalog::tax_revenue(), {0.8, 1.0});
  for (const AlphaSweepRow& r : rows) {
    EXPECT_EQ(r.equilibria, (std::vector<Profile>{{2, 1, 0}}));
    EXPECT_TRUE(r.any_efficient);
  }
  EXPECT_NEAR(rows[0].min_equilibrium_payoff, 5746.0, 0.1);
  EXPECT_THROW(alpha_sweep(catalog::tax_revenue(), {}), InvalidArgument);
}

TEST(AlphaSweepTest, EndpointsMatchShapleyAndEqualSplit) {
  const Economy e = catalog::dominated_equilibrium();
  const auto rows = alpha_sweep(e, {0.0, 1.0});
  EXPECT_EQ(rows[1].equilibria,
            pure_nash(build_game(e, PayScheme::MakeShapley())));
  EXPECT_EQ(rows[0].equilibria,
            (std::vector<Profile>{{0, 2}, {1, 0}, {2, 1}}));
}

TEST(Alpha0Test, Examples) {
  const Alpha0Result weak = find_alpha0(catalog::coordination());
  EXPECT_DOUBLE_EQ(weak.alpha0, 1.0);
  EXPECT_FALSE(weak.first_failure.has_value());

  const Alpha0Result table4 = find_alpha0(catalog::dominated_equilibrium());
  EXPECT_LT(table4.alpha0, 1.0);
  EXPECT_GE(table4.alpha0, 0.01);
  ASSERT_TRUE(table4.first_failure.has_value());
  EXPECT_NEAR(*table4.first_failure - table4.alpha0, 0.01, 1e-12);
  EXPECT_THROW(find_alpha0(catalog::coordination(), 0.0), InvalidArgument);
}

TEST(Alpha0Test, BracketIsTight) {
  const Economy e = catalog::dominated_equilibrium();
  const Alpha0Result r = find_alpha0(e, 0.01);
  const auto rows = alpha_sweep(e, make_grid(0.0, r.alpha0, 0.01));
  for (const AlphaSweepRow& row : rows) EXPECT_TRUE(row.any_efficient);
  EXPECT_FALSE(alpha_sweep(e, {*r.first_failure})[0].any_efficient);
}

TEST(NonnegativityTest, Examples) {
  EXPECT_TRUE(check_nonnegativity(catalog::tax_revenue(), 0.8).nonnegative);
  const Economy zero = Economy::Anonymous({2, 2}, {0, 0}, {0, 0, 0, 0});
  EXPECT_TRUE(check_nonnegativity(zero, 0.5).nonnegative);
  EXPECT_THROW(check_nonnegativity(Economy::Anonymous({2}, {0}, {0, -1}), 1.0),
               PreconditionError);
}

TEST(ReferenceTest, DominatedEquilibrium) {
  const Economy e = catalog::dominated_equilibrium();
  const ReferenceCertificate c = optimal_reference(e, 1.0);
  EXPECT_EQ(c.reference, (Profile{1, 0}));
  EXPECT_DOUBLE_EQ(c.surplus, 13.0);
  EXPECT_TRUE(c.certified);
  EXPECT_NEAR(c.payoffs[0], 6.5, 1e-9);
  EXPECT_NEAR(c.payoffs[1], 6.5, 1e-9);

  const ReferenceCertificate other = certify_reference(e, {2, 1}, 1.0);
  EXPECT_TRUE(other.certified);
  EXPECT_NEAR(other.payoffs[0], 6.5, 1e-9);
  EXPECT_NEAR(other.payoffs[1], 6.5, 1e-9);

  EXPECT_FALSE(certify_reference(e, {1, 3}, 1.0).certified);
  EXPECT_THROW(optimal_reference(Economy::Anonymous({2}, {0}, {0, -1}), 1.0),
               PreconditionError);
}

TEST(ReferenceTest, AlreadyOptimalReference) {
  const Economy e = Economy::Anonymous({2, 2}, {1, 1}, {1, 2, 3, 0});
  const Economy shifted = e.WithSurplus({-3, -2, -1, 0});
  EXPECT_THROW(optimal_reference(shifted, 1.0), PreconditionError);
  const Economy top = Economy::Anonymous({2, 2}, {1, 1}, {1, 2, 3, 4});
  const ReferenceCertificate c = optimal_reference(top, 1.0);
  EXPECT_EQ(c.reference, (Profile{1, 1}));
  EXPECT_TRUE(c.certified);
}

TEST(SocialJusticePropertyTest, SweepsAndCertificates) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const Economy e = testing::RandomEconomy(rng, {.max_agents = 3, .max_actions = 3});
    const std::vector<double> grid = make_grid(0.0, 1.0, 0.05);
    ASSERT_EQ(grid.size(), 21u);
    for (const AlphaSweepRow& row : alpha_sweep(e, grid)) {
      ASSERT_FALSE(row.equilibria.empty()) << "alpha " << row.alpha;
    }
    for (const Profile& x : AllProfiles(e)) {
      const Payoffs sh = shapley_pay(e, x);
      for (double alpha : {0.25, 0.5, 1.0}) {
        const Payoffs es = egalitarian_pay(e, x, alpha);
        for (int i = 0; i < e.num_agents(); ++i) {
          for (int j = 0; j < e.num_agents(); ++j) {
            if (sh[i] < sh[j] - 1e-9) ASSERT_LT(es[i], es[j]);
          }
        }
      }
    }
    double top = 0.0;
    for (double v : e.surplus_table()) top = std::max(top, v);
    if (top <= 0.0) continue;
    for (double alpha : {0.0, 0.5, 1.0}) {
      const ReferenceCertificate c = optimal_reference(e, alpha);
      ASSERT_TRUE(c.certified);
      const int n = e.num_agents();
      for (int i = 0; i < n; ++i) {
        ASSERT_NEAR(c.payoffs[i], c.surplus / n, 1e-9);
        for (int a = 0; a < e.num_actions(i); ++a) {
          Profile y = c.reference;
          y[i] = a;
          const double fy = e.surplus(y);
          const double bound = alpha * (fy - c.surplus) + (1 - alpha) * fy / n +
                               alpha * c.surplus / n;
          ASSERT_LE(bound, c.surplus / n + 1e-9);
        }
      }
    }
  }
}

TEST(SocialJusticePropertyTest, NonnegativeSurplusGivesNonnegativePay) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Economy e = testing::RandomEconomy(
        rng, {.max_agents = 3, .max_actions = 4, .lo = 0.0, .hi = 10.0});
    for (double alpha : {0.0, 0.5, 1.0}) {
      ASSERT_TRUE(check_nonnegativity(e, alpha).nonnegative);
    }
  }
}

}  // namespace
}  // namespace fairgame
