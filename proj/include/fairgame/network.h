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

#ifndef FAIRGAME_NETWORK_H_
#define FAIRGAME_NETWORK_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fairgame {

// Undirected simple graph on agents 0..n-1, stored as a bitmask over the
// n(n-1)/2 unordered pairs (i < j) in lexicographic order.
class Network {
 public:
  static constexpr int kMaxAgents = 11;

  explicit Network(int n);
  // Throws InvalidArgument on self-links or endpoints outside 0..n-1.
  Network(int n, const std::vector<std::pair<int, int>>& links);
  static Network FromMask(int n, std::uint64_t mask);
  static Network Complete(int n);

  int num_agents() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int num_links() const;
  bool HasLink(int i, int j) const;
  std::vector<std::pair<int, int>> Links() const;
  std::vector<int> Neighbors(int i) const;

  Network WithLink(int i, int j) const;
  Network WithoutLink(int i, int j) const;
  // g^S: keeps only links with both endpoints in `coalition` (bit i = agent i).
  Network Restrict(std::uint32_t coalition) const;

  // Sizes of connected components, isolated agents included.
  std::vector<int> ComponentSizes() const;

  // Bit index of pair (i, j).
  static int PairBit(int n, int i, int j);

  // "{12,23}" with 1-based agent labels.
  std::string ToString() const;

  bool operator==(const Network& other) const = default;

 private:
  int n_;
  std::uint64_t mask_ = 0;
};

// P(g) = Σ_j n_j² / n² over component sizes n_j.
double contagion_potential(const Network& g);

// c̃(g) = P(g) - 1/n.
double collective_contagion(const Network& g);

struct ContagionParams {
  double lambda = 0.0;
  // v(g); √l(g) when empty.
  std::function<double(const Network&)> value_fn;
};

// f(g) = v(g) - λ·c̃(g). Throws InvalidArgument for λ < 0.
double network_surplus(const Network& g, const ContagionParams& p);

// Shapley value of agent i in the coalition game S ↦ f(g^S).
double network_shapley(const Network& g, const ContagionParams& p, int agent);
std::vector<double> network_shapley_all(const Network& g,
                                         const ContagionParams& p);

inline constexpr int kMaxPairwiseAgents = 7;

// Networks where no agent strictly gains by deleting any nonempty subset of
// its own links and where no absent link ij has φ_i strictly gaining without
// φ_j strictly losing (in both orientations). Ordered by link mask. Throws
// SizeCapExceeded for n > kMaxPairwiseAgents.
std::vector<Network> pairwise_nash_networks(int n, const ContagionParams& p);

struct RegimeRow {
  double lambda = 0.0;
  std::vector<int> link_counts;  // distinct l(g) over stable networks
  std::vector<Network> networks;
};

std::vector<RegimeRow> lambda_regime_sweep(int n,
                                           const std::vector<double>& lambdas,
                                           ContagionParams base = {});

struct RegimeBoundary {
  double lower = 0.0;  // last λ with the old class set
  double upper = 0.0;  // first λ with the new class set
  double estimate = 0.0;
  std::vector<int> before;
  std::vector<int> after;
};

// Sweeps λ over [lo, hi] with `step`, then bisects each change of link-count
// classes to `tolerance`.
std::vector<RegimeBoundary> locate_regime_boundaries(
    int n, double lo, double hi, double step, double tolerance = 1e-6,
    ContagionParams base = {});

}  // namespace fairgame

#endif  // FAIRGAME_NETWORK_H_
