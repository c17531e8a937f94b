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

#ifndef FAIRGAME_PAY_SCHEMES_H_
#define FAIRGAME_PAY_SCHEMES_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fairgame/economy.h"

namespace fairgame {

// Payoff vector, one entry per agent.
using Payoffs = std::vector<double>;

// A full payoff table: entry k is the payoff vector at ProfileIndex k.
struct CustomTable {
  std::vector<Payoffs> payoffs;
};

// How the surplus at each profile is split among agents.
class PayScheme {
 public:
  struct Shapley {};
  struct Egalitarian {
    double alpha;
  };
  struct ShiftedShapley {
    double alpha;
  };
  using Kind = std::variant<Shapley, Egalitarian, ShiftedShapley, CustomTable>;

  static PayScheme MakeShapley() { return PayScheme(Shapley{}); }
  // Throws InvalidArgument unless alpha ∈ [0, 1].
  static PayScheme MakeEgalitarian(double alpha);
  static PayScheme MakeShifted(double alpha);
  static PayScheme MakeCustom(CustomTable table);

  const Kind& kind() const { return kind_; }
  bool is_custom() const { return std::holds_alternative<CustomTable>(kind_); }
  // Weight on the Shapley part: 1 for Shapley, alpha for the mixed schemes.
  // Meaningless for custom tables.
  double alpha() const;
  // "shapley", "egalitarian:0.8", "shifted:0.5" or "table".
  std::string Describe() const;

 private:
  explicit PayScheme(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

// s!(k-s-1)!/k!, the Shapley weight of a coalition of size s out of k active
// agents (excluding the agent being paid). Tabulated in double precision for
// k ≤ 20, evaluated in log space beyond.
double ShapleyWeight(int s, int k);

// Generalized Shapley pay at `x`. Throws PreconditionError if f(o) ≠ 0.
Payoffs shapley_pay(const Economy& e, const Profile& x);

// Harsanyi-style dividends: coeffs[k] = c_x(f) for x = profile_at(k), with the
// reference entry holding f(o). The basis function for x is the indicator of
// {z : x ∈ Δ(z)}, so f(z) = Σ_{x ∈ Δ(z)} c_x(f).
struct DividendTable {
  std::vector<double> coeffs;

  // Σ_{x ∈ Δ(z)} c_x: the reconstruction of f at z.
  double Reconstruct(const Economy& e, const Profile& z) const;
};

// Indicator basis function f_x(z) = [x ∈ Δ(z)].
double basis_function(const Economy& e, const Profile& x, const Profile& z);

// Dividends of f. Throws PreconditionError if f(o) ≠ 0.
DividendTable dividends(const Economy& e);

// Shapley pay computed from dividends: component i is Σ c_y/|y| over the
// y ∈ Δ(x) in which i is active.
Payoffs shapley_via_dividends(const Economy& e, const DividendTable& table,
                              const Profile& x);

// alpha·Sh(f, x) + (1 - alpha)·f(x)/n.
Payoffs egalitarian_pay(const Economy& e, const Profile& x, double alpha);

// alpha·(Sh(f - f(o), x) + f(o)/n) + (1 - alpha)·f(x)/n. Requires f(o) > 0.
Payoffs shifted_pay(const Economy& e, const Profile& x, double alpha);

// The stored vector at `x`. Throws InvalidArgument if the table does not
// cover every profile with an n-vector.
Payoffs custom_pay(const Economy& e, const CustomTable& table,
                   const Profile& x);

// Dispatches on the scheme.
Payoffs pay(const Economy& e, const PayScheme& scheme, const Profile& x);

// Checks the scheme's preconditions against `e`: f(o) = 0 for Shapley and
// Egalitarian, f(o) > 0 for ShiftedShapley, a total table for CustomTable.
void CheckApplicable(const Economy& e, const PayScheme& scheme);

// Σ_x |N^x|·2^{|x|-1}: the number of marginal-contribution terms needed to
// evaluate Shapley pay at every profile.
double ShapleyTermCount(const Economy& e);

inline constexpr double kDefaultMaxShapleyTerms = 1e8;

}  // namespace fairgame

#endif  // FAIRGAME_PAY_SCHEMES_H_
