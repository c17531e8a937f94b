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

#include "fairgame/network.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "fairgame/economy.h"
#include "fairgame/errors.h"
#include "fairgame/pay_schemes.h"

namespace fairgame {
namespace {

void CheckAgents(int n) {
  if (n < 1 || n > Network::kMaxAgents) {
    throw InvalidArgument("network size must lie in 1.." +
                          std::to_string(Network::kMaxAgents));
  }
}

int NumPairs(int n) { return n * (n - 1) / 2; }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  int Size(int root) const { return size_[root]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Links of the complete graph on `coalition`, as a pair-bit mask.
std::uint64_t WithinMask(int n, std::uint32_t coalition) {
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    if (!(coalition >> i & 1U)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (coalition >> j & 1U) mask |= std::uint64_t{1} << Network::PairBit(n, i, j);
    }
  }
  return mask;
}

// Shapley values of the coalition game S ↦ value(mask & within[S]).
template <typename Value>
void ShapleyOfMask(int n, std::uint64_t mask,
                   const std::vector<std::uint64_t>& within,
                   const Value& value, double* out) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    double sum = 0.0;
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (s & bit) continue;
      const double gain = value(mask & within[s | bit]) - value(mask & within[s]);
      if (gain != 0.0) sum += ShapleyWeight(std::popcount(s), n) * gain;
    }
    out[i] = sum;
  }
}

std::vector<std::uint64_t> AllWithinMasks(int n) {
  std::vector<std::uint64_t> within(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < within.size(); ++s) within[s] = WithinMask(n, s);
  return within;
}

std::vector<int> LinkClasses(const std::vector<Network>& networks) {
  std::vector<int> counts;
  for (const Network& g : networks) counts.push_back(g.num_links());
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  return counts;
}

}  // namespace

Network::Network(int n) : n_(n) { CheckAgents(n); }

Network::Network(int n, const std::vector<std::pair<int, int>>& links)
    : Network(n) {
  for (const auto& [i, j] : links) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw InvalidArgument("link endpoint outside 0.." + std::to_string(n - 1));
    }
    if (i == j) throw InvalidArgument("self-links are not allowed");
    mask_ |= std::uint64_t{1} << PairBit(n, i, j);
  }
}

Network Network::FromMask(int n, std::uint64_t mask) {
  Network g(n);
  const int pairs = NumPairs(n);
  if (pairs < 64 && (mask >> pairs) != 0) {
    throw InvalidArgument("link mask has bits beyond the agent pairs");
  }
  g.mask_ = mask;
  return g;
}

Network Network::Complete(int n) {
  const int pairs = NumPairs(n);
  return FromMask(n, pairs == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << pairs) - 1);
}

int Network::PairBit(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // Pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

int Network::num_links() const { return std::popcount(mask_); }

bool Network::HasLink(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) return false;
  return mask_ >> PairBit(n_, i, j) & 1U;
}

std::vector<std::pair<int, int>> Network::Links() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (HasLink(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<int> Network::Neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (HasLink(i, j)) out.push_back(j);
  }
  return out;
}

Network Network::WithLink(int i, int j) const {
  Network g = *this;
  g.mask_ |= Network(n_, {{i, j}}).mask_;
  return g;
}

Network Network::WithoutLink(int i, int j) const {
  Network g = *this;
  g.mask_ &= ~Network(n_, {{i, j}}).mask_;
  return g;
}

Network Network::Restrict(std::uint32_t coalition) const {
  return FromMask(n_, mask_ & WithinMask(n_, coalition));
}

std::vector<int> Network::ComponentSizes() const {
  UnionFind uf(n_);
  for (const auto& [i, j] : Links()) uf.Union(i, j);
  std::vector<int> sizes;
  for (int v = 0; v < n_; ++v) {
    if (uf.Find(v) == v) sizes.push_back(uf.Size(v));
  }
  return sizes;
}

std::string Network::ToString() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, j] : Links()) {
    if (!first) out += ",";
    first = false;
    if (n_ < 10) {
      out += std::to_string(i + 1) + std::to_string(j + 1);
    } else {
      out += std::to_string(i + 1) + "-" + std::to_string(j + 1);
    }
  }
  return out + "}";
}

double contagion_potential(const Network& g) {
  double sum = 0.0;
  for (int s : g.ComponentSizes()) sum += static_cast<double>(s) * s;
  const double n = g.num_agents();
  return sum / (n * n);
}

double collective_contagion(const Network& g) {
  return contagion_potential(g) - 1.0 / g.num_agents();
}

double network_surplus(const Network& g, const ContagionParams& p) {
  if (!(p.lambda >= 0.0)) throw InvalidArgument("lambda must be nonnegative");
  const double v = p.value_fn ? p.value_fn(g) : std::sqrt(g.num_links());
  return v - p.lambda * collective_contagion(g);
}

std::vector<double> network_shapley_all(const Network& g,
                                        const ContagionParams& p) {
  const int n = g.num_agents();
  if (n > 20) throw SizeCapExceeded("too many agents for coalition Shapley");
  const std::vector<std::uint64_t> within = AllWithinMasks(n);
  auto value = [&](std::uint64_t m) {
    return network_surplus(Network::FromMask(n, m), p);
  };
  std::vector<double> out(n);
  ShapleyOfMask(n, g.mask(), within, value, out.data());
  return out;
}

double network_shapley(const Network& g, const ContagionParams& p, int agent) {
  if (agent < 0 || agent >= g.num_agents()) {
    throw InvalidArgument("agent index out of range");
  }
  return network_shapley_all(g, p)[agent];
}

std::vector<Network> pairwise_nash_networks(int n, const ContagionParams& p) {
  CheckAgents(n);
  if (n > kMaxPairwiseAgents) {
    throw SizeCapExceeded("pairwise-stable enumeration supports at most " +
                          std::to_string(kMaxPairwiseAgents) + " agents");
  }
  if (!(p.lambda >= 0.0)) throw InvalidArgument("lambda must be nonnegative");
  const int pairs = NumPairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs;

  std::vector<double> f(total);
  for (std::uint64_t m = 0; m < total; ++m) {
    f[m] = network_surplus(Network::FromMask(n, m), p);
  }
  const std::vector<std::uint64_t> within = AllWithinMasks(n);
  auto value = [&](std::uint64_t m) { return f[m]; };
  std::vector<double> phi(total * n);
  for (std::uint64_t m = 0; m < total; ++m) {
    ShapleyOfMask(n, m, within, value, &phi[m * n]);
  }
  auto payoff = [&](std::uint64_t m, int i) { return phi[m * n + i]; };

  std::vector<std::uint64_t> own(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) own[i] |= std::uint64_t{1} << Network::PairBit(n, i, j);
    }
  }

  std::vector<Network> out;
  for (std::uint64_t m = 0; m < total; ++m) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      const std::uint64_t mine = m & own[i];
      const double base = payoff(m, i);
      for (std::uint64_t t = mine; t != 0 && stable; t = (t - 1) & mine) {
        if (payoff(m & ~t, i) > base + kTolerance) stable = false;
      }
    }
    for (int i = 0; i < n && stable; ++i) {
      for (int j = i + 1; j < n && stable; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << Network::PairBit(n, i, j);
        if (m & bit) continue;
        const std::uint64_t added = m | bit;
        const bool i_gains = payoff(added, i) > payoff(m, i) + kTolerance;
        const bool j_gains = payoff(added, j) > payoff(m, j) + kTolerance;
        const bool i_loses = payoff(added, i) < payoff(m, i) - kTolerance;
        const bool j_loses = payoff(added, j) < payoff(m, j) - kTolerance;
        if ((i_gains && !j_loses) || (j_gains && !i_loses)) stable = false;
      }
    }
    if (stable) out.push_back(Network::FromMask(n, m));
  }
  return out;
}

std::vector<RegimeRow> lambda_regime_sweep(int n,
                                           const std::vector<double>& lambdas,
                                           ContagionParams base) {
  std::vector<RegimeRow> rows;
  for (double lambda : lambdas) {
    base.lambda = lambda;
    RegimeRow row;
    row.lambda = lambda;
    row.networks = pairwise_nash_networks(n, base);
    row.link_counts = LinkClasses(row.networks);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RegimeBoundary> locate_regime_boundaries(int n, double lo,
                                                     double hi, double step,
                                                     double tolerance,
                                                     ContagionParams base) {
  if (!(step > 0.0) || !(hi > lo) || !(tolerance > 0.0)) {
    throw InvalidArgument("invalid lambda sweep range");
  }
  auto classes = [&](double lambda) {
    base.lambda = lambda;
    return LinkClasses(pairwise_nash_networks(n, base));
  };
  std::vector<RegimeBoundary> out;
  const long long steps =
      static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
  double prev = lo;
  std::vector<int> prev_classes = classes(lo);
  for (long long s = 1; s <= steps; ++s) {
    const double lambda = lo + static_cast<double>(s) * step;
    std::vector<int> current = classes(lambda);
    if (current != prev_classes) {
      RegimeBoundary b;
      b.before = prev_classes;
      b.after = current;
      double a = prev;
      double c = lambda;
      while (c - a > tolerance) {
        const double mid = 0.5 * (a + c);
        (classes(mid) == prev_classes ? a : c) = mid;
      }
      b.lower = a;
      b.upper = c;
      b.estimate = 0.5 * (a + c);
      // A regime that exists at a single λ shows up as two touching
      // boundaries; report it as one.
      if (!out.empty() && out.back().after == b.before &&
          b.lower - out.back().upper <= tolerance) {
        RegimeBoundary& last = out.back();
        last.after = b.after;
        last.upper = b.upper;
        last.estimate = 0.5 * (last.lower + last.upper);
      } else {
        out.push_back(std::move(b));
      }
    }
    prev = lambda;
    prev_classes = std::move(current);
  }
  return out;
}

}  // namespace fairgame
