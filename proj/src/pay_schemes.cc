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

#include "fairgame/pay_schemes.h"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>

#include "fairgame/errors.h"

namespace fairgame {
namespace {

constexpr int kMaxTabulatedAgents = 20;

std::array<double, kMaxTabulatedAgents + 1> MakeFactorials() {
  std::array<double, kMaxTabulatedAgents + 1> f{};
  f[0] = 1.0;
  for (int i = 1; i <= kMaxTabulatedAgents; ++i) f[i] = f[i - 1] * i;
  return f;
}

const std::array<double, kMaxTabulatedAgents + 1>& Factorials() {
  static const auto table = MakeFactorials();
  return table;
}

void CheckAlpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in [0, 1], got " +
                          std::to_string(alpha));
  }
}

void RequireZeroAtReference(const Economy& e, const char* what) {
  const double f0 = e.surplus_at(e.reference_index());
  if (std::abs(f0) > kTolerance) {
    throw PreconditionError(std::string(what) +
                            " requires zero surplus at the reference profile, "
                            "got f(o) = " + std::to_string(f0));
  }
}

// Shapley pay at x for the shifted surplus f - shift.
Payoffs ShapleyAt(const Economy& e, const Profile& x, double shift) {
  std::vector<int> active;
  const std::vector<ProfileIndex> sub =
      internal::SubProfileIndices(e, x, &active);
  const int k = static_cast<int>(active.size());
  Payoffs out(e.num_agents(), 0.0);
  if (k == 0) return out;
  std::vector<double> values(sub.size());
  for (std::size_t m = 0; m < sub.size(); ++m) {
    values[m] = e.surplus_at(sub[m]) - shift;
  }
  for (int b = 0; b < k; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    double sum = 0.0;
    for (std::size_t mask = 0; mask < sub.size(); ++mask) {
      if (mask & bit) continue;
      sum += ShapleyWeight(std::popcount(mask), k) *
             (values[mask | bit] - values[mask]);
    }
    out[active[b]] = sum;
  }
  return out;
}

}  // namespace

PayScheme PayScheme::MakeEgalitarian(double alpha) {
  CheckAlpha(alpha);
  return PayScheme(Egalitarian{alpha});
}

PayScheme PayScheme::MakeShifted(double alpha) {
  CheckAlpha(alpha);
  return PayScheme(ShiftedShapley{alpha});
}

PayScheme PayScheme::MakeCustom(CustomTable table) {
  return PayScheme(std::move(table));
}

double PayScheme::alpha() const {
  if (const auto* eg = std::get_if<Egalitarian>(&kind_)) return eg->alpha;
  if (const auto* sh = std::get_if<ShiftedShapley>(&kind_)) return sh->alpha;
  return 1.0;
}

std::string PayScheme::Describe() const {
  // Shortest representation that parses back to the same alpha.
  auto number = [](double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
  };
  if (std::holds_alternative<Shapley>(kind_)) return "shapley";
  if (const auto* eg = std::get_if<Egalitarian>(&kind_)) {
    return "egalitarian:" + number(eg->alpha);
  }
  if (const auto* sh = std::get_if<ShiftedShapley>(&kind_)) {
    return "shifted:" + number(sh->alpha);
  }
  return "table";
}

double ShapleyWeight(int s, int k) {
  if (k <= 0 || s < 0 || s >= k) {
    throw InvalidArgument("Shapley weight needs 0 <= s < k");
  }
  if (k <= kMaxTabulatedAgents) {
    const auto& fact = Factorials();
    return fact[s] * fact[k - s - 1] / fact[k];
  }
  return std::exp(std::lgamma(s + 1.0) + std::lgamma(k - s + 0.0) -
                  std::lgamma(k + 1.0));
}

Payoffs shapley_pay(const Economy& e, const Profile& x) {
  RequireZeroAtReference(e, "Shapley pay");
  return ShapleyAt(e, x, 0.0);
}

double DividendTable::Reconstruct(const Economy& e, const Profile& z) const {
  double sum = 0.0;
  for (ProfileIndex k : internal::SubProfileIndices(e, z, nullptr)) {
    sum += coeffs[k];
  }
  return sum;
}

double basis_function(const Economy& e, const Profile& x, const Profile& z) {
  return is_sub_profile(e, x, z) ? 1.0 : 0.0;
}

DividendTable dividends(const Economy& e) {
  RequireZeroAtReference(e, "dividends");
  // The signed sum over Δ(x) factors into one difference per coordinate:
  // c = ⊗_i (δ_{x_i} - [x_i ≠ o_i]·δ_{o_i}) applied to f.
  DividendTable table;
  table.coeffs.assign(e.surplus_table().begin(), e.surplus_table().end());
  for (int i = 0; i < e.num_agents(); ++i) {
    const std::size_t stride = e.stride(i);
    const int m = e.num_actions(i);
    const int ref = e.reference()[i];
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      const int digit = static_cast<int>((k / stride) % m);
      if (digit == ref) continue;
      const ProfileIndex base = k - stride * digit + stride * ref;
      table.coeffs[k] -= table.coeffs[base];
    }
  }
  return table;
}

Payoffs shapley_via_dividends(const Economy& e, const DividendTable& table,
                              const Profile& x) {
  if (table.coeffs.size() != e.num_profiles()) {
    throw InvalidArgument("dividend table does not match the economy");
  }
  std::vector<int> active;
  const std::vector<ProfileIndex> sub =
      internal::SubProfileIndices(e, x, &active);
  Payoffs out(e.num_agents(), 0.0);
  for (std::size_t mask = 1; mask < sub.size(); ++mask) {
    const double share = table.coeffs[sub[mask]] / std::popcount(mask);
    for (std::size_t rest = mask; rest != 0; rest &= rest - 1) {
      out[active[std::countr_zero(rest)]] += share;
    }
  }
  return out;
}

Payoffs egalitarian_pay(const Economy& e, const Profile& x, double alpha) {
  CheckAlpha(alpha);
  Payoffs sh = shapley_pay(e, x);
  const double equal = e.surplus(x) / e.num_agents();
  for (double& v : sh) v = alpha * v + (1.0 - alpha) * equal;
  return sh;
}

Payoffs shifted_pay(const Economy& e, const Profile& x, double alpha) {
  CheckAlpha(alpha);
  const double f0 = e.surplus_at(e.reference_index());
  if (!(f0 > 0.0)) {
    throw PreconditionError(
        "shifted Shapley pay requires positive surplus at the reference, "
        "got f(o) = " + std::to_string(f0));
  }
  const int n = e.num_agents();
  Payoffs out = ShapleyAt(e, x, f0);
  const double equal = e.surplus(x) / n;
  for (double& v : out) v = alpha * (v + f0 / n) + (1.0 - alpha) * equal;
  return out;
}

Payoffs custom_pay(const Economy& e, const CustomTable& table,
                   const Profile& x) {
  const ProfileIndex k = e.index_of(x);
  if (k >= table.payoffs.size()) {
    throw InvalidArgument("payoff table has no entry for " + e.Format(x));
  }
  const Payoffs& v = table.payoffs[k];
  if (static_cast<int>(v.size()) != e.num_agents()) {
    throw InvalidArgument("payoff table entry for " + e.Format(x) +
                          " is not an n-vector");
  }
  return v;
}

Payoffs pay(const Economy& e, const PayScheme& scheme, const Profile& x) {
  return std::visit(
      [&](const auto& kind) -> Payoffs {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, PayScheme::Shapley>) {
          return shapley_pay(e, x);
        } else if constexpr (std::is_same_v<T, PayScheme::Egalitarian>) {
          return egalitarian_pay(e, x, kind.alpha);
        } else if constexpr (std::is_same_v<T, PayScheme::ShiftedShapley>) {
          return shifted_pay(e, x, kind.alpha);
        } else {
          return custom_pay(e, kind, x);
        }
      },
      scheme.kind());
}

void CheckApplicable(const Economy& e, const PayScheme& scheme) {
  if (const auto* table = std::get_if<CustomTable>(&scheme.kind())) {
    if (table->payoffs.size() != e.num_profiles()) {
      throw InvalidArgument("payoff table covers " +
                            std::to_string(table->payoffs.size()) +
                            " profiles, economy has " +
                            std::to_string(e.num_profiles()));
    }
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      if (static_cast<int>(table->payoffs[k].size()) != e.num_agents()) {
        throw InvalidArgument("payoff table entry for " +
                              e.Format(e.profile_at(k)) +
                              " is not an n-vector");
      }
    }
    return;
  }
  if (std::holds_alternative<PayScheme::ShiftedShapley>(scheme.kind())) {
    const double f0 = e.surplus_at(e.reference_index());
    if (!(f0 > 0.0)) {
      throw PreconditionError(
          "shifted Shapley pay requires positive surplus at the reference");
    }
    return;
  }
  RequireZeroAtReference(e, "the Shapley and egalitarian schemes");
}

double ShapleyTermCount(const Economy& e) {
  // With G(t) = Π_i (1 + m_i t), m_i = |X_i| - 1, the count is G'(2).
  double total = 0.0;
  for (int i = 0; i < e.num_agents(); ++i) {
    double term = e.num_actions(i) - 1.0;
    for (int j = 0; j < e.num_agents(); ++j) {
      if (j != i) term *= 1.0 + 2.0 * (e.num_actions(j) - 1.0);
    }
    total += term;
  }
  return total;
}

}  // namespace fairgame
