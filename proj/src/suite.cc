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

#include "fairgame/suite.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fairgame/applications.h"
#include "fairgame/catalog.h"
#include "fairgame/errors.h"
#include "fairgame/exchange.h"
#include "fairgame/monotonicity.h"
#include "fairgame/network.h"
#include "fairgame/social_justice.h"

namespace fairgame {
namespace {

using Table = std::vector<Payoffs>;

Profile ProfileOf(const Economy& e, const std::vector<std::string>& labels) {
  Profile x(e.num_agents());
  for (int i = 0; i < e.num_agents(); ++i) {
    const auto& acts = e.action_labels(i);
    const auto it = std::find(acts.begin(), acts.end(), labels.at(i));
    if (it == acts.end()) throw InvalidArgument("unknown label " + labels[i]);
    x[i] = static_cast<int>(it - acts.begin());
  }
  return x;
}

std::string FormatSet(const Economy& e, const std::vector<Profile>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ",";
    out += e.Format(xs[k]);
  }
  return out + "}";
}

std::string FormatVector(const std::vector<double>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) os << ",";
    os << v[k];
  }
  os << ")";
  return os.str();
}

bool Near(const std::vector<double>& a, const std::vector<double>& b,
          double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

SuiteRow CompareTensor(const std::string& name, const Game& g,
                       const Table& expected) {
  SuiteRow row{name, true, "all " + std::to_string(expected.size()) +
                               " profiles match"};
  if (expected.size() != g.num_profiles()) {
    return {name, false, "table size differs from the game"};
  }
  for (ProfileIndex k = 0; k < g.num_profiles(); ++k) {
    const auto got = g.payoffs(k);
    const Payoffs v(got.begin(), got.end());
    if (!Near(v, expected[k], 1e-9)) {
      return {name, false,
              g.economy().Format(g.economy().profile_at(k)) + ": got " +
                  FormatVector(v) + ", expected " + FormatVector(expected[k])};
    }
  }
  return row;
}

SuiteRow CompareSet(const std::string& name, const Economy& e,
                    const std::vector<Profile>& got,
                    const std::vector<std::vector<std::string>>& expected) {
  std::vector<Profile> want;
  for (const auto& labels : expected) want.push_back(ProfileOf(e, labels));
  std::sort(want.begin(), want.end(), [&](const Profile& a, const Profile& b) {
    return e.index_of(a) < e.index_of(b);
  });
  std::vector<Profile> sorted = got;
  std::sort(sorted.begin(), sorted.end(),
            [&](const Profile& a, const Profile& b) {
              return e.index_of(a) < e.index_of(b);
            });
  const bool pass = sorted == want;
  return {name, pass,
          "got " + FormatSet(e, sorted) +
              (pass ? "" : ", expected " + FormatSet(e, want))};
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // Runs `check` on the loaded document, turning exceptions into failures.
  template <typename Check>
  void WithDocument(const std::string& stem, const std::string& name,
                    Check check) {
    try {
      const EconomyDocument doc = load_economy(dir_ / (stem + ".econ"));
      rows_.push_back(check(doc));
      rows_.back().name = stem + ": " + name;
    } catch (const std::exception& err) {
      rows_.push_back({stem + ": " + name, false, err.what()});
    }
  }

  template <typename Check>
  void Standalone(const std::string& name, Check check) {
    try {
      rows_.push_back(check());
      rows_.back().name = name;
    } catch (const std::exception& err) {
      rows_.push_back({name, false, err.what()});
    }
  }

  std::vector<SuiteRow> Take() { return std::move(rows_); }

 private:
  std::filesystem::path dir_;
  std::vector<SuiteRow> rows_;
};

Game GameOf(const EconomyDocument& doc) {
  return build_game(doc.economy, document_scheme(doc), doc.costs);
}

SuiteRow UniqueEquilibrium(const Game& g,
                           const std::vector<std::string>& labels,
                           const Payoffs& payoffs, bool efficient,
                           double tol = 1e-9) {
  const Economy& e = g.economy();
  const std::vector<Profile> eqs = pure_nash(g);
  const Profile want = ProfileOf(e, labels);
  if (eqs.size() != 1 || eqs.front() != want) {
    return {"", false,
            "equilibria " + FormatSet(e, eqs) + ", expected {" + e.Format(want) +
                "}"};
  }
  const Payoffs got = g.payoffs(want);
  if (!Near(got, payoffs, tol)) {
    return {"", false, "payoffs " + FormatVector(got) + ", expected " +
                           FormatVector(payoffs)};
  }
  const bool is_efficient = !pareto_dominator(g, want).has_value();
  if (is_efficient != efficient) {
    return {"", false, std::string("equilibrium is ") +
                           (is_efficient ? "efficient" : "dominated")};
  }
  return {"", true,
          e.Format(want) + " pays " + FormatVector(got) +
              (efficient ? ", efficient" : ", Pareto-dominated")};
}

std::string Classes(const std::vector<int>& counts) {
  std::string out = "{";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(counts[k]);
  }
  return out + "}";
}

}  // namespace

std::vector<std::pair<std::string, EconomyDocument>> bundled_documents() {
  auto plain = [](Economy e, PayScheme s) {
    return EconomyDocument{std::move(e), std::move(s), std::nullopt,
                           std::nullopt};
  };
  auto tabled = [](Economy e, CustomTable t) {
    return EconomyDocument{std::move(e), PayScheme::MakeCustom(t),
                           std::nullopt, std::move(t)};
  };
  auto from_game = [&](const Game& g) {
    return tabled(g.economy(), std::get<CustomTable>(g.scheme().kind()));
  };
  std::vector<std::pair<std::string, EconomyDocument>> docs;
  docs.emplace_back("two_by_three",
                    plain(catalog::two_by_three(), PayScheme::MakeShapley()));
  docs.emplace_back("two_by_three_unfair",
                    tabled(catalog::two_by_three(),
                           catalog::two_by_three_unfair()));
  docs.emplace_back("cycling_game", from_game(catalog::cycling_game()));
  docs.emplace_back("dominated_equilibrium",
                    plain(catalog::dominated_equilibrium(),
                          PayScheme::MakeShapley()));
  docs.emplace_back("coordination",
                    plain(catalog::coordination(), PayScheme::MakeShapley()));
  docs.emplace_back("monotone_f",
                    plain(catalog::monotone_f(), PayScheme::MakeShapley()));
  docs.emplace_back("monotone_f_biased",
                    tabled(catalog::monotone_f(), catalog::monotone_f_table()));
  docs.emplace_back("monotone_g",
                    plain(catalog::monotone_g(), PayScheme::MakeShapley()));
  docs.emplace_back("monotone_g_biased",
                    tabled(catalog::monotone_g(), catalog::monotone_g_table()));
  docs.emplace_back("prisoners_dilemma",
                    from_game(catalog::prisoners_dilemma()));
  docs.emplace_back("teamwork",
                    EconomyDocument{teamwork_bonus(), PayScheme::MakeShapley(),
                                    teamwork_costs(), std::nullopt});
  docs.emplace_back("publishing",
                    plain(publishing_economy(), PayScheme::MakeShapley()));
  docs.emplace_back("publishing_biased",
                    tabled(publishing_economy(), publishing_bias_table()));
  docs.emplace_back("tax", plain(catalog::tax_revenue(),
                                 PayScheme::MakeEgalitarian(0.8)));
  return docs;
}

void export_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [stem, doc] : bundled_documents()) {
    save_economy(doc, dir / (stem + ".econ"));
  }
}

std::vector<SuiteRow> run_reference_suite(
    const std::filesystem::path& corpus_dir) {
  SuiteBuilder s(corpus_dir);

  s.WithDocument("two_by_three", "Shapley tensor", [](const auto& doc) {
    return CompareTensor("", GameOf(doc),
                         {{0, 0}, {0, 5}, {0, 5}, {2, 0}, {0.5, 3.5}, {0.5, 3.5}});
  });
  s.WithDocument("two_by_three", "equilibria", [](const auto& doc) {
    return CompareSet("", doc.economy, pure_nash(GameOf(doc)),
                      {{"a2", "b2"}, {"a2", "b3"}});
  });
  s.WithDocument("two_by_three_unfair", "no equilibrium", [](const auto& doc) {
    return CompareSet("", doc.economy, pure_nash(GameOf(doc)), {});
  });
  s.WithDocument("two_by_three_unfair", "audit", [](const auto& doc) {
    const FairnessAudit a = audit_fairness(doc.economy, *doc.payoffs);
    const bool pass = !a.fair && a.local_efficiency && !a.marginality;
    return SuiteRow{"", pass,
                    std::string("fair=") + (a.fair ? "yes" : "no") +
                        " marginality=" + (a.marginality ? "ok" : "violated")};
  });
  s.WithDocument("cycling_game", "improvement cycle", [](const auto& doc) {
    const Game g = GameOf(doc);
    const auto cycle = find_deviation_cycle(g);
    if (!cycle) return SuiteRow{"", false, "no cycle found"};
    const Economy& e = g.economy();
    const std::vector<Profile> want = {
        ProfileOf(e, {"c", "a"}), ProfileOf(e, {"d", "a"}),
        ProfileOf(e, {"d", "b"}), ProfileOf(e, {"c", "b"})};
    const bool pass = cycle->profiles == want &&
                      std::abs(cycle->excess_sum - 10.0) < 1e-9 &&
                      pure_nash(g).empty();
    return SuiteRow{"", pass,
                    FormatSet(e, cycle->profiles) + " excess " +
                        FormatVector({cycle->excess_sum})};
  });
  s.WithDocument("dominated_equilibrium", "Shapley tensor", [](const auto& doc) {
    return CompareTensor("", GameOf(doc),
                         {{0, 0}, {0, 0}, {0, 12}, {0, 6},
                          {13, 0}, {6.5, -6.5}, {1.5, 0.5}, {4, -3},
                          {3, 0}, {8, 5}, {-1, 8}, {-1, 2}});
  });
  s.WithDocument("dominated_equilibrium", "equilibrium", [](const auto& doc) {
    const Game g = GameOf(doc);
    SuiteRow row = UniqueEquilibrium(g, {"a2", "b3"}, {1.5, 0.5}, false);
    if (!row.pass) return row;
    const auto dom = pareto_dominator(g, ProfileOf(g.economy(), {"a2", "b3"}));
    row.pass = dom && *dom == ProfileOf(g.economy(), {"a3", "b2"});
    row.detail += dom ? " by " + g.economy().Format(*dom) : "";
    return row;
  });
  s.WithDocument("dominated_equilibrium", "no improvement cycle",
                 [](const auto& doc) {
                   const bool none = !find_deviation_cycle(GameOf(doc), 12);
                   return SuiteRow{"", none, none ? "acyclic" : "cycle found"};
                 });
  s.WithDocument("dominated_equilibrium", "optimal reference",
                 [](const auto& doc) {
                   const ReferenceCertificate c =
                       optimal_reference(doc.economy, 1.0);
                   const bool pass = c.certified &&
                                     Near(c.payoffs, {6.5, 6.5}, 1e-9) &&
                                     std::abs(c.surplus - 13) < 1e-9;
                   return SuiteRow{"", pass,
                                   doc.economy.Format(c.reference) + " pays " +
                                       FormatVector(c.payoffs)};
                 });
  s.WithDocument("coordination", "equilibria", [](const auto& doc) {
    const Game g = GameOf(doc);
    SuiteRow row = CompareSet("", doc.economy, pure_nash(g),
                              {{"c", "a"}, {"d", "b"}});
    const Profile db = ProfileOf(doc.economy, {"d", "b"});
    row.pass = row.pass && !pareto_dominator(g, db) &&
               Near(g.payoffs(db), {1, 1}, 1e-9);
    return row;
  });
  s.WithDocument("coordination", "weak monotonicity", [](const auto& doc) {
    const MonotonicityVerdict v = check_weak_monotonicity(doc.economy);
    const bool pass =
        v.weak && v.witness == ProfileOf(doc.economy, {"d", "b"});
    return SuiteRow{"", pass, v.method};
  });
  s.WithDocument("monotone_f", "strict monotonicity", [](const auto& doc) {
    const MonotonicityVerdict v = check_strict_monotonicity(doc.economy);
    return SuiteRow{"", v.strict && v.weak, v.method};
  });
  s.WithDocument("monotone_f", "fair equilibrium", [](const auto& doc) {
    return UniqueEquilibrium(GameOf(doc), {"a2", "b2"}, {2, 1}, true);
  });
  s.WithDocument("monotone_f_biased", "no equilibrium", [](const auto& doc) {
    return CompareSet("", doc.economy, pure_nash(GameOf(doc)), {});
  });
  s.WithDocument("monotone_g", "weak monotonicity", [](const auto& doc) {
    const MonotonicityVerdict v = check_weak_monotonicity(doc.economy);
    const bool pass =
        v.weak && v.witness == ProfileOf(doc.economy, {"a2", "b2"});
    return SuiteRow{"", pass, v.method};
  });
  s.WithDocument("monotone_g_biased", "no equilibrium", [](const auto& doc) {
    return CompareSet("", doc.economy, pure_nash(GameOf(doc)), {});
  });
  s.WithDocument("prisoners_dilemma", "equilibrium", [](const auto& doc) {
    return UniqueEquilibrium(GameOf(doc), {"Defect", "Defect"}, {-1, -1},
                             false);
  });
  s.WithDocument("teamwork", "Shapley bonus tensor", [](const auto& doc) {
    return CompareTensor(
        "", build_game(doc.economy, PayScheme::MakeShapley()),
        {{0, 0}, {0, 5}, {0, 1}, {0, 13},
         {2, 0}, {2.5, 5.5}, {5.5, 4.5}, {-4.5, 6.5},
         {5, 0}, {6.5, 6.5}, {2.5, -1.5}, {2.5, 10.5},
         {3, 0}, {3.5, 5.5}, {7.5, 5.5}, {-4, 6}});
  });
  s.WithDocument("teamwork", "net tensor", [](const auto& doc) {
    return CompareTensor(
        "", GameOf(doc),
        {{0, 0}, {0, 1}, {0, -3}, {0, 8},
         {-2, 0}, {-1.5, 1.5}, {1.5, 0.5}, {-8.5, 1.5},
         {1, 0}, {2.5, 2.5}, {-1.5, -5.5}, {-1.5, 5.5},
         {0, 0}, {0.5, 1.5}, {4.5, 1.5}, {-7, 1}});
  });
  s.WithDocument("teamwork", "equilibria", [](const auto& doc) {
    const Game g = GameOf(doc);
    const std::vector<Profile> eqs = pure_nash(g);
    SuiteRow row = CompareSet("", doc.economy, eqs,
                              {{"b4", "d3"}, {"b1", "d4"}});
    for (const Profile& x : eqs) row.pass = row.pass && !pareto_dominator(g, x);
    return row;
  });
  s.WithDocument("publishing_biased", "equilibrium", [](const auto& doc) {
    return UniqueEquilibrium(GameOf(doc), {"3", "2"}, {4, 4}, false);
  });
  s.WithDocument("publishing", "equilibrium", [](const auto& doc) {
    return UniqueEquilibrium(GameOf(doc), {"1", "1"}, {10, 10}, true);
  });
  s.WithDocument("publishing", "Shapley tensor", [](const auto& doc) {
    return CompareTensor("", GameOf(doc),
                         {{0, 0}, {0, 10}, {0, 8}, {0, 4},
                          {10, 0}, {10, 10}, {8, 6}, {7, 1},
                          {8, 0}, {6, 8}, {5, 5}, {6, 2},
                          {4, 0}, {1, 7}, {2, 6}, {3, 3}});
  });
  s.WithDocument("tax", "Shapley equilibrium", [](const auto& doc) {
    return UniqueEquilibrium(build_game(doc.economy, PayScheme::MakeShapley()),
                             {"c", "b", "a"}, {45015.5, 41175.5, 0}, true);
  });
  s.WithDocument("tax", "egalitarian equilibrium", [](const auto& doc) {
    return UniqueEquilibrium(GameOf(doc), {"c", "b", "a"},
                             {41758.5, 38686.5, 5746.0}, true, 0.1);
  });

  const std::vector<std::pair<double, std::vector<int>>> regimes = {
      {1.0, {3}}, {2.0, {1, 3}}, {2.7, {1}}, {5.0, {0}}};
  for (const auto& [lambda, want] : regimes) {
    std::ostringstream name;
    name << "network n=3 lambda=" << lambda;
    s.Standalone(name.str(), [&, lambda = lambda, want = want] {
      const auto rows = lambda_regime_sweep(3, {lambda});
      const bool pass = rows.front().link_counts == want;
      return SuiteRow{"", pass, "link classes " +
                                    Classes(rows.front().link_counts)};
    });
  }

  auto exchange_row = [](const ExchangeSpec& spec,
                         const std::vector<std::vector<std::string>>& want) {
    const ExchangeEconomy ex = build_exchange_economy(spec);
    const ExchangeOutcome out = solve_exchange(ex);
    return CompareSet("", ex.economy(), out.fair_outcomes, want);
  };
  s.Standalone("exchange: unit demand", [&] {
    return exchange_row(unit_demand_exchange(),
                        {{"(1,0)", "(2,1)"}, {"(1,0)", "(1,1)"}});
  });
  s.Standalone("exchange: quasilinear swap", [&] {
    SuiteRow row = exchange_row(quasilinear_swap_market(), {{"c", "c"}});
    const ExchangeEconomy ex = build_exchange_economy(quasilinear_swap_market());
    const Game g = build_game(ex.economy(), PayScheme::MakeShapley());
    row.pass = row.pass && Near(g.payoffs(Profile{2, 2}), {2, 2}, 1e-9);
    return row;
  });
  s.Standalone("exchange: homogeneous market", [&] {
    return exchange_row(homogeneous_market(), {{"(1)", "(1)"}});
  });
  s.Standalone("exchange: heterogeneous market", [&] {
    return exchange_row(heterogeneous_market(), {{"(0)", "(3)"}});
  });
  return s.Take();
}

}  // namespace fairgame
