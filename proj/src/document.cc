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

#include "fairgame/document.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "fairgame/errors.h"
#include "json.hpp"

namespace fairgame {
namespace {

using Json = nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void Fail(const std::string& path,
                         const std::string& msg) const {
    throw DocumentError(source_ + ": " + path + ": " + msg);
  }

  const Json& Field(const Json& obj, const std::string& path,
                    const char* key) const {
    if (!obj.is_object()) Fail(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) Fail(path, std::string("missing field '") + key + "'");
    return *it;
  }

  std::string String(const Json& v, const std::string& path) const {
    if (!v.is_string()) Fail(path, "expected a string");
    return v.get<std::string>();
  }

  double Number(const Json& v, const std::string& path) const {
    if (!v.is_number()) Fail(path, "expected a number");
    return v.get<double>();
  }

  const Json& Array(const Json& v, const std::string& path) const {
    if (!v.is_array()) Fail(path, "expected an array");
    return v;
  }

 private:
  std::string source_;
};

struct AgentBlock {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> actions;
  Profile reference;
  std::optional<ActionCosts> costs;
};

AgentBlock ReadAgents(const Reader& r, const Json& root) {
  const Json& agents = r.Array(r.Field(root, "$", "agents"), "agents");
  if (agents.empty()) r.Fail("agents", "at least one agent is required");
  AgentBlock block;
  std::vector<std::optional<std::vector<double>>> costs;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string path = "agents[" + std::to_string(i) + "]";
    const Json& a = agents[i];
    const std::string name = r.String(r.Field(a, path, "name"), path + ".name");
    if (name.empty()) r.Fail(path + ".name", "empty agent name");
    for (const std::string& other : block.names) {
      if (other == name) r.Fail(path + ".name", "duplicate agent '" + name + "'");
    }
    const Json& acts = r.Array(r.Field(a, path, "actions"), path + ".actions");
    if (acts.empty()) r.Fail(path + ".actions", "no actions");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < acts.size(); ++k) {
      const std::string p = path + ".actions[" + std::to_string(k) + "]";
      std::string label = r.String(acts[k], p);
      for (const std::string& other : labels) {
        if (other == label) r.Fail(p, "duplicate action '" + label + "'");
      }
      labels.push_back(std::move(label));
    }
    int ref = 0;
    if (a.contains("reference")) {
      const std::string label =
          r.String(a["reference"], path + ".reference");
      const auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) {
        r.Fail(path + ".reference", "unknown action '" + label + "'");
      }
      ref = static_cast<int>(it - labels.begin());
    }
    std::optional<std::vector<double>> row;
    if (a.contains("costs")) {
      const Json& c = r.Array(a["costs"], path + ".costs");
      if (c.size() != labels.size()) {
        r.Fail(path + ".costs", "expected " + std::to_string(labels.size()) +
                                    " entries, one per action");
      }
      row.emplace();
      for (std::size_t k = 0; k < c.size(); ++k) {
        const std::string p = path + ".costs[" + std::to_string(k) + "]";
        const double v = r.Number(c[k], p);
        if (v < 0) r.Fail(p, "costs must be nonnegative");
        row->push_back(v);
      }
      if ((*row)[ref] != 0.0) {
        r.Fail(path + ".costs", "reference action '" + labels[ref] +
                                    "' must cost 0");
      }
    }
    block.names.push_back(name);
    block.actions.push_back(std::move(labels));
    block.reference.push_back(ref);
    costs.push_back(std::move(row));
  }
  for (const auto& row : costs) {
    if (!row) continue;
    block.costs.emplace();
    for (std::size_t i = 0; i < costs.size(); ++i) {
      block.costs->push_back(
          costs[i] ? *costs[i]
                   : std::vector<double>(block.actions[i].size(), 0.0));
    }
    break;
  }
  return block;
}

// Profile object {"agent": "label", ...} → index.
ProfileIndex ReadProfile(const Reader& r, const Json& obj,
                         const std::string& path, const Economy& shape) {
  if (!obj.is_object()) r.Fail(path, "expected an object of agent: action");
  const int n = shape.num_agents();
  Profile x(n, -1);
  for (const auto& [key, value] : obj.items()) {
    const auto& names = shape.agent_names();
    const auto it = std::find(names.begin(), names.end(), key);
    if (it == names.end()) r.Fail(path, "unknown agent '" + key + "'");
    const int i = static_cast<int>(it - names.begin());
    const std::string label = r.String(value, path + "." + key);
    const auto& labels = shape.action_labels(i);
    const auto jt = std::find(labels.begin(), labels.end(), label);
    if (jt == labels.end()) {
      r.Fail(path + "." + key,
             "unknown action '" + label + "' for agent '" + key + "'");
    }
    x[i] = static_cast<int>(jt - labels.begin());
  }
  for (int i = 0; i < n; ++i) {
    if (x[i] < 0) {
      r.Fail(path, "no action given for agent '" + shape.agent_names()[i] + "'");
    }
  }
  return shape.index_of(x);
}

Json ProfileJson(const Economy& e, ProfileIndex k) {
  const Profile x = e.profile_at(k);
  Json obj = Json::object();
  for (int i = 0; i < e.num_agents(); ++i) {
    obj[e.agent_names()[i]] = e.action_labels(i)[x[i]];
  }
  return obj;
}

std::pair<int, int> LineColumn(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t p = 0; p + 1 < byte && p < text.size(); ++p) {
    if (text[p] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

PayScheme parse_scheme(const std::string& text,
                       const std::optional<CustomTable>& payoffs) {
  if (text == "shapley") return PayScheme::MakeShapley();
  if (text == "table") {
    if (!payoffs) {
      throw InvalidArgument("scheme 'table' needs a payoff table");
    }
    return PayScheme::MakeCustom(*payoffs);
  }
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    double alpha = 0.0;
    const auto res =
        std::from_chars(arg.data(), arg.data() + arg.size(), alpha);
    if (res.ec != std::errc() || res.ptr != arg.data() + arg.size()) {
      throw InvalidArgument("bad alpha '" + arg + "' in scheme '" + text + "'");
    }
    if (kind == "egalitarian") return PayScheme::MakeEgalitarian(alpha);
    if (kind == "shifted") return PayScheme::MakeShifted(alpha);
  }
  throw InvalidArgument("unknown scheme '" + text +
                        "'; expected shapley, egalitarian:<alpha>, "
                        "shifted:<alpha> or table");
}

EconomyDocument parse_economy(const std::string& text,
                              const std::string& source) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& err) {
    const auto [line, col] = LineColumn(text, err.byte);
    throw DocumentError(source + ":" + std::to_string(line) + ":" +
                        std::to_string(col) + ": malformed JSON (" +
                        err.what() + ")");
  }
  const Reader r(source);
  if (!root.is_object()) r.Fail("$", "expected a top-level object");
  AgentBlock block = ReadAgents(r, root);

  std::size_t total = 1;
  for (const auto& a : block.actions) total *= a.size();
  const Economy shape(block.names, block.actions, block.reference,
                      std::vector<double>(total, 0.0));

  std::optional<CustomTable> payoffs;
  if (root.contains("payoffs")) {
    const Json& rows = r.Array(root["payoffs"], "payoffs");
    std::vector<std::optional<Payoffs>> seen(total);
    for (std::size_t m = 0; m < rows.size(); ++m) {
      const std::string path = "payoffs[" + std::to_string(m) + "]";
      const ProfileIndex k = ReadProfile(
          r, r.Field(rows[m], path, "profile"), path + ".profile", shape);
      if (seen[k]) {
        r.Fail(path, "duplicate entry for " + shape.Format(shape.profile_at(k)));
      }
      const Json& values =
          r.Array(r.Field(rows[m], path, "values"), path + ".values");
      if (values.size() != block.names.size()) {
        r.Fail(path + ".values",
               "expected " + std::to_string(block.names.size()) + " payoffs");
      }
      Payoffs v;
      for (std::size_t i = 0; i < values.size(); ++i) {
        v.push_back(
            r.Number(values[i], path + ".values[" + std::to_string(i) + "]"));
      }
      seen[k] = std::move(v);
    }
    payoffs.emplace();
    for (ProfileIndex k = 0; k < total; ++k) {
      if (!seen[k]) {
        r.Fail("payoffs",
               "missing entry for profile " + shape.Format(shape.profile_at(k)));
      }
      payoffs->payoffs.push_back(std::move(*seen[k]));
    }
  }

  std::vector<double> surplus(total, 0.0);
  if (root.contains("surplus")) {
    const Json& rows = r.Array(root["surplus"], "surplus");
    std::vector<bool> seen(total, false);
    for (std::size_t m = 0; m < rows.size(); ++m) {
      const std::string path = "surplus[" + std::to_string(m) + "]";
      const ProfileIndex k = ReadProfile(
          r, r.Field(rows[m], path, "profile"), path + ".profile", shape);
      if (seen[k]) {
        r.Fail(path, "duplicate entry for " + shape.Format(shape.profile_at(k)));
      }
      seen[k] = true;
      surplus[k] = r.Number(r.Field(rows[m], path, "value"), path + ".value");
    }
    for (ProfileIndex k = 0; k < total; ++k) {
      if (!seen[k]) {
        r.Fail("surplus",
               "missing entry for profile " + shape.Format(shape.profile_at(k)));
      }
    }
  } else if (payoffs) {
    for (ProfileIndex k = 0; k < total; ++k) {
      double sum = 0.0;
      for (double v : payoffs->payoffs[k]) sum += v;
      surplus[k] = sum;
    }
  } else {
    r.Fail("$", "either 'surplus' or 'payoffs' is required");
  }

  EconomyDocument doc{shape.WithSurplus(std::move(surplus)), std::nullopt,
                      std::move(block.costs), std::move(payoffs)};
  if (root.contains("scheme")) {
    const std::string text_scheme = r.String(root["scheme"], "scheme");
    try {
      doc.scheme = parse_scheme(text_scheme, doc.payoffs);
    } catch (const InvalidArgument& err) {
      r.Fail("scheme", err.what());
    }
  }
  return doc;
}

EconomyDocument load_economy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_economy(buffer.str(), path.string());
}

std::string dump_economy(const EconomyDocument& doc) {
  const Economy& e = doc.economy;
  Json root = Json::object();
  Json agents = Json::array();
  for (int i = 0; i < e.num_agents(); ++i) {
    Json a = Json::object();
    a["name"] = e.agent_names()[i];
    a["actions"] = e.action_labels(i);
    a["reference"] = e.action_labels(i)[e.reference()[i]];
    if (doc.costs) a["costs"] = (*doc.costs)[i];
    agents.push_back(std::move(a));
  }
  root["agents"] = std::move(agents);
  Json surplus = Json::array();
  for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
    surplus.push_back({{"profile", ProfileJson(e, k)},
                       {"value", e.surplus_at(k)}});
  }
  root["surplus"] = std::move(surplus);
  if (doc.scheme) root["scheme"] = doc.scheme->Describe();
  if (doc.payoffs) {
    Json rows = Json::array();
    for (ProfileIndex k = 0; k < e.num_profiles(); ++k) {
      rows.push_back({{"profile", ProfileJson(e, k)},
                      {"values", doc.payoffs->payoffs[k]}});
    }
    root["payoffs"] = std::move(rows);
  }
  return root.dump(2) + "\n";
}

void save_economy(const EconomyDocument& doc,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DocumentError(path.string() + ": cannot write file");
  out << dump_economy(doc);
  if (!out) throw DocumentError(path.string() + ": write failed");
}

PayScheme document_scheme(const EconomyDocument& doc) {
  if (doc.scheme) return *doc.scheme;
  if (doc.payoffs) return PayScheme::MakeCustom(*doc.payoffs);
  return PayScheme::MakeShapley();
}

}  // namespace fairgame
