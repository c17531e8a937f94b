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

#include <fmt/core.h>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairgame/document.h"
#include "fairgame/equilibrium.h"
#include "fairgame/errors.h"
#include "fairgame/network.h"
#include "fairgame/social_justice.h"
#include "fairgame/suite.h"

namespace {

using namespace fairgame;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeCap = 3;

struct Options {
  std::string file;
  std::string scheme;
  std::string grid = "0:1:0.05";
  std::string out = "table";
  std::string corpus = FAIRGAME_CORPUS_DIR;
  std::string dir;
  std::vector<double> lambdas;
  int n = 3;
  int precision = 1;
  double max_terms = kDefaultMaxShapleyTerms;
};

std::string Num(double v, int precision) {
  const double unit = 0.5 * std::pow(10.0, -precision);
  if (std::abs(v) < unit) v = 0.0;
  return fmt::format("{:.{}f}", v, precision);
}

std::string Vec(const std::vector<double>& v, int precision) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ",";
    out += Num(v[k], precision);
  }
  return out + ")";
}

// Quotes a CSV field when it contains a separator.
std::string Csv(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

PayScheme SchemeFor(const Options& o, const EconomyDocument& doc) {
  return o.scheme.empty() ? document_scheme(doc)
                          : parse_scheme(o.scheme, doc.payoffs);
}

std::vector<double> ParseGrid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw InvalidArgument("bad grid '" + text + "'; expected lo:hi:step");
    }
  }
  if (parts.size() != 3) {
    throw InvalidArgument("bad grid '" + text + "'; expected lo:hi:step");
  }
  if (parts[0] < 0 || parts[1] > 1) {
    throw InvalidArgument("alpha grid must lie within [0, 1]");
  }
  return make_grid(parts[0], parts[1], parts[2]);
}

int Solve(const Options& o) {
  const EconomyDocument doc = load_economy(o.file);
  const Game g = build_game(doc.economy, SchemeFor(o, doc), doc.costs,
                            o.max_terms);
  const EquilibriumReport report = solve(g);
  const Economy& e = g.economy();
  if (o.out == "csv") {
    std::cout << "profile,payoffs,pareto_efficient,potential\n";
    for (const auto& eq : report.equilibria) {
      std::cout << Csv(e.Format(eq.profile)) << ","
                << Csv(Vec(eq.payoffs, o.precision)) << ","
                << (eq.pareto_efficient ? "yes" : "no") << ","
                << (eq.potential ? Num(*eq.potential, o.precision) : "") << "\n";
    }
    return 0;
  }
  std::cout << "scheme: " << g.scheme().Describe() << "\n";
  if (report.equilibria.empty()) {
    std::cout << "no pure equilibrium\n";
    return 0;
  }
  std::vector<std::string> pareto;
  std::size_t width = 6;
  for (const auto& eq : report.equilibria) {
    std::string p = eq.pareto_efficient ? "efficient" : "dominated";
    if (eq.dominator) p += " by " + e.Format(*eq.dominator);
    width = std::max(width, p.size());
    pareto.push_back(std::move(p));
  }
  std::cout << fmt::format("{:<24} {:<28} {:<{}} {}\n", "profile", "payoffs",
                           "pareto", width, "potential");
  for (std::size_t k = 0; k < pareto.size(); ++k) {
    const auto& eq = report.equilibria[k];
    std::cout << fmt::format(
        "{:<24} {:<28} {:<{}} {}\n", e.Format(eq.profile),
        Vec(eq.payoffs, o.precision), pareto[k], width,
        eq.potential ? Num(*eq.potential, o.precision) : "-");
  }
  return 0;
}

int Audit(const Options& o) {
  const EconomyDocument doc = load_economy(o.file);
  CustomTable table;
  if (!o.scheme.empty() && o.scheme != "table") {
    const PayScheme scheme = parse_scheme(o.scheme, doc.payoffs);
    for (ProfileIndex k = 0; k < doc.economy.num_profiles(); ++k) {
      table.payoffs.push_back(pay(doc.economy, scheme, doc.economy.profile_at(k)));
    }
  } else if (doc.payoffs) {
    table = *doc.payoffs;
  } else {
    throw InvalidArgument("audit needs a payoff table in the document or --scheme");
  }
  const FairnessAudit a = audit_fairness(doc.economy, table);
  auto line = [](const char* name, bool ok) {
    std::cout << fmt::format("{:<18} {}\n", name, ok ? "holds" : "violated");
  };
  line("local efficiency", a.local_efficiency);
  line("unproductivity", a.unproductivity);
  line("symmetry", a.symmetry);
  line("marginality", a.marginality);
  std::cout << fmt::format("{:<18} {}\n", "shapley",
                           a.fair ? "equal" : "differs");
  std::cout << fmt::format("{:<18} {}\n", "max deviation",
                           Num(a.max_shapley_deviation, o.precision));
  for (const std::string& d : a.diagnostics) std::cout << "  " << d << "\n";
  return 0;
}

int Potential(const Options& o) {
  const EconomyDocument doc = load_economy(o.file);
  const Game g = build_game(doc.economy, SchemeFor(o, doc), doc.costs,
                            o.max_terms);
  const std::vector<double> phi = exact_potential(g);
  const Economy& e = g.economy();
  if (o.out == "csv") std::cout << "profile,potential\n";
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    const std::string p = e.Format(e.profile_at(k));
    if (o.out == "csv") {
      std::cout << Csv(p) << "," << Num(phi[k], o.precision) << "\n";
    } else {
      std::cout << fmt::format("{:<24} {}\n", p, Num(phi[k], o.precision));
    }
  }
  return 0;
}

int AlphaSweep(const Options& o) {
  const EconomyDocument doc = load_economy(o.file);
  const auto rows = alpha_sweep(doc.economy, ParseGrid(o.grid), o.max_terms);
  const Economy& e = doc.economy;
  const bool csv = o.out != "table";
  if (csv) std::cout << "alpha,equilibria,any_efficient,min_equilibrium_payoff\n";
  for (const AlphaSweepRow& r : rows) {
    std::string eqs;
    for (std::size_t k = 0; k < r.equilibria.size(); ++k) {
      if (k > 0) eqs += " ";
      eqs += e.Format(r.equilibria[k]);
    }
    const std::string alpha = fmt::format("{:.4g}", r.alpha);
    if (csv) {
      std::cout << alpha << "," << Csv(eqs) << ","
                << (r.any_efficient ? "yes" : "no") << ","
                << Num(r.min_equilibrium_payoff, o.precision) << "\n";
    } else {
      std::cout << fmt::format("{:<8} {:<40} {:<4} {}\n", alpha, eqs,
                               r.any_efficient ? "yes" : "no",
                               Num(r.min_equilibrium_payoff, o.precision));
    }
  }
  return 0;
}

int NetworkCmd(const Options& o) {
  const std::vector<double> lambdas =
      o.lambdas.empty() ? std::vector<double>{1.0, 2.0, 2.7, 5.0} : o.lambdas;
  const auto rows = lambda_regime_sweep(o.n, lambdas);
  const bool csv = o.out == "csv";
  if (csv) std::cout << "lambda,link_classes,networks\n";
  for (const RegimeRow& r : rows) {
    std::string classes = "{";
    for (std::size_t k = 0; k < r.link_counts.size(); ++k) {
      if (k > 0) classes += ",";
      classes += std::to_string(r.link_counts[k]);
    }
    classes += "}";
    std::string nets;
    for (std::size_t k = 0; k < r.networks.size(); ++k) {
      if (k > 0) nets += " ";
      nets += r.networks[k].ToString();
    }
    const std::string lambda = fmt::format("{:g}", r.lambda);
    if (csv) {
      std::cout << lambda << "," << Csv(classes) << "," << Csv(nets) << "\n";
    } else {
      std::cout << fmt::format("lambda={:<8} links {:<10} {}\n", lambda,
                               classes, nets);
    }
  }
  return 0;
}

int Suite(const Options& o) {
  int failures = 0;
  for (const SuiteRow& row : run_reference_suite(o.corpus)) {
    std::cout << (row.pass ? "PASS " : "FAIL ") << row.name << "  "
              << row.detail << "\n";
    if (!row.pass) ++failures;
  }
  return failures == 0 ? 0 : kExitMismatch;
}

int ExportCorpus(const Options& o) {
  export_corpus(o.dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium analysis of free economies with fair pay schemes"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) {
      sub->add_option("file", o.file, "Economy document (.econ)")
          ->required()
          ->check(CLI::ExistingFile);
    }
    sub->add_option("--scheme", o.scheme,
                    "shapley | egalitarian:<a> | shifted:<a> | table");
    sub->add_option("--max-terms", o.max_terms,
                    "Refuse games needing more Shapley terms");
    sub->add_option("--out", o.out, "table or csv")
        ->check(CLI::IsMember({"table", "csv"}));
    sub->add_option("--precision", o.precision, "Decimals in reports")
        ->check(CLI::Range(0, 17));
  };

  int (*handler)(const Options&) = nullptr;
  CLI::App* solve = app.add_subcommand("solve", "Pure equilibria with Pareto status");
  add_common(solve, true);
  solve->callback([&] { handler = Solve; });

  CLI::App* audit = app.add_subcommand("audit", "Check a payoff table against the fairness axioms");
  add_common(audit, true);
  audit->callback([&] { handler = Audit; });

  CLI::App* potential = app.add_subcommand("potential", "Exact potential of a scheme-generated game");
  add_common(potential, true);
  potential->callback([&] { handler = Potential; });

  CLI::App* sweep = app.add_subcommand("alpha-sweep", "Egalitarian games over a grid of alpha");
  add_common(sweep, true);
  sweep->add_option("--grid", o.grid, "lo:hi:step");
  sweep->callback([&] {
    if (sweep->count("--out") == 0) o.out = "csv";
    handler = AlphaSweep;
  });

  CLI::App* network = app.add_subcommand("network", "Pairwise-stable contagion networks");
  network->add_option("--n", o.n, "Number of agents")->check(CLI::Range(1, 11));
  network->add_option("--lambda", o.lambdas, "Severity values (repeatable)");
  network->add_option("--out", o.out, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  network->callback([&] { handler = NetworkCmd; });

  CLI::App* suite = app.add_subcommand("suite", "Run the bundled example corpus");
  suite->add_option("--corpus", o.corpus, "Corpus directory")
      ->check(CLI::ExistingDirectory);
  suite->callback([&] { handler = Suite; });

  CLI::App* exp = app.add_subcommand("export-corpus", "Write the bundled examples");
  exp->add_option("dir", o.dir, "Output directory")->required();
  exp->callback([&] { handler = ExportCorpus; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return handler(o);
  } catch (const SizeCapExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitSizeCap;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
}
