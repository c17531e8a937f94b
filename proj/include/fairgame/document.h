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

#ifndef FAIRGAME_DOCUMENT_H_
#define FAIRGAME_DOCUMENT_H_

#include <filesystem>
#include <optional>
#include <string>

#include "fairgame/economy.h"
#include "fairgame/equilibrium.h"
#include "fairgame/pay_schemes.h"

namespace fairgame {

// An economy file: agents with their actions, reference action and optional
// costs; surplus entries keyed by agent name and action label; an optional
// scheme and an optional payoff table.
//
//   {
//     "agents": [
//       {"name": "1", "actions": ["a1", "a2"], "reference": "a1",
//        "costs": [0, 4]},
//       ...
//     ],
//     "surplus": [{"profile": {"1": "a2", "2": "b1"}, "value": 2}, ...],
//     "scheme": "shapley" | "egalitarian:0.8" | "shifted:0.5" | "table",
//     "payoffs": [{"profile": {...}, "values": [2, 0]}, ...]
//   }
//
// "surplus" may be omitted when "payoffs" is present; f is then the sum of
// payoffs at each profile.
struct EconomyDocument {
  Economy economy;
  std::optional<PayScheme> scheme;
  std::optional<ActionCosts> costs;
  std::optional<CustomTable> payoffs;
};

// Parses "shapley", "egalitarian:<alpha>", "shifted:<alpha>" or "table".
// "table" needs `payoffs`. Throws InvalidArgument.
PayScheme parse_scheme(const std::string& text,
                       const std::optional<CustomTable>& payoffs = std::nullopt);

// Throws DocumentError with the source name and a line/column or field path.
EconomyDocument parse_economy(const std::string& text,
                              const std::string& source = "<input>");
EconomyDocument load_economy(const std::filesystem::path& path);

std::string dump_economy(const EconomyDocument& doc);
void save_economy(const EconomyDocument& doc,
                  const std::filesystem::path& path);

// The scheme named in the document, else the payoff table when present,
// else Shapley.
PayScheme document_scheme(const EconomyDocument& doc);

}  // namespace fairgame

#endif  // FAIRGAME_DOCUMENT_H_
