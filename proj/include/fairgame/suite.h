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

#ifndef FAIRGAME_SUITE_H_
#define FAIRGAME_SUITE_H_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fairgame/document.h"

namespace fairgame {

// The bundled example documents, keyed by file stem.
std::vector<std::pair<std::string, EconomyDocument>> bundled_documents();

// Writes every bundled document as <dir>/<stem>.econ.
void export_corpus(const std::filesystem::path& dir);

struct SuiteRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Loads the corpus from `corpus_dir` and checks every recorded fact about the
// bundled examples, plus the network and exchange examples.
std::vector<SuiteRow> run_reference_suite(
    const std::filesystem::path& corpus_dir);

}  // namespace fairgame

#endif  // FAIRGAME_SUITE_H_
