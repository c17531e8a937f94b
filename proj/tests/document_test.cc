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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fairgame/errors.h"
#include "fairgame/suite.h"

namespace fairgame {
namespace {

constexpr const char* kTwoByTwo = R"({
  "agents": [
    {"name": "1", "actions": ["a1", "a2"], "reference": "a1"},
    {"name": "2", "actions": ["b1", "b2"]}
  ],
  "surplus": [
    {"profile": {"1": "a1", "2": "b1"}, "value": 0},
    {"profile": {"1": "a1", "2": "b2"}, "value": 1},
    {"profile": {"1": "a2", "2": "b1"}, "value": 2},
    {"profile": {"1": "a2", "2": "b2"}, "value": 3}
  ]
})";

std::string Replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  if (at != std::string::npos) s.replace(at, from.size(), to);
  return s;
}

std::string ErrorOf(const std::string& text) {
  try {
    parse_economy(text, "doc");
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

bool SameDocument(const EconomyDocument& a, const EconomyDocument& b) {
  const Economy& x = a.economy;
  const Economy& y = b.economy;
  if (x.agent_names() != y.agent_names() || x.reference() != y.reference()) {
    return false;
  }
  for (int i = 0; i < x.num_agents(); ++i) {
    if (x.action_labels(i) != y.action_labels(i)) return false;
  }
  if (!std::equal(x.surplus_table().begin(), x.surplus_table().end(),
                  y.surplus_table().begin(), y.surplus_table().end())) {
    return false;
  }
  if (a.costs != b.costs) return false;
  if (a.payoffs.has_value() != b.payoffs.has_value()) return false;
  if (a.payoffs && a.payoffs->payoffs != b.payoffs->payoffs) return false;
  if (a.scheme.has_value() != b.scheme.has_value()) return false;
  return !a.scheme || a.scheme->Describe() == b.scheme->Describe();
}

TEST(DocumentTest, ParsesMinimalDocument) {
  const EconomyDocument doc = parse_economy(kTwoByTwo);
  EXPECT_EQ(doc.economy.num_agents(), 2);
  EXPECT_EQ(doc.economy.surplus({1, 1}), 3.0);
  EXPECT_EQ(doc.economy.reference(), (Profile{0, 0}));
  EXPECT_FALSE(doc.scheme.has_value());
  EXPECT_EQ(document_scheme(doc).Describe(), "shapley");
}

TEST(DocumentTest, MissingSurplusEntryNamesProfile) {
  const std::string text = Replace(
      kTwoByTwo, R"(,
    {"profile": {"1": "a2", "2": "b2"}, "value": 3})", "");
  const std::string err = ErrorOf(text);
  EXPECT_NE(err.find("(a2,b2)"), std::string::npos) << err;
}

TEST(DocumentTest, RejectsCostAtReference) {
  const std::string text = Replace(kTwoByTwo, R"("reference": "a1")",
                                   R"("reference": "a1", "costs": [1, 0])");
  EXPECT_NE(ErrorOf(text).find("must cost 0"), std::string::npos);
}

TEST(DocumentTest, SyntaxErrorHasPosition) {
  const std::string err = ErrorOf("{\n  \"agents\": [\n  oops\n}");
  EXPECT_NE(err.find("doc:3:"), std::string::npos) << err;
}

TEST(DocumentTest, FieldErrors) {
  EXPECT_NE(ErrorOf(Replace(kTwoByTwo, R"("reference": "a1")", R"("reference": "zz")"))
                .find("unknown action 'zz'"),
            std::string::npos);
  EXPECT_NE(ErrorOf(Replace(kTwoByTwo, R"("value": 1)", R"("value": "x")"))
                .find("expected a number"),
            std::string::npos);
  EXPECT_NE(ErrorOf(Replace(kTwoByTwo, R"("name": "2")", R"("name": "1")"))
                .find("duplicate agent"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"surplus": []})").find("agents"), std::string::npos);
}

TEST(DocumentTest, Schemes) {
  EXPECT_EQ(parse_scheme("shapley").Describe(), "shapley");
  EXPECT_EQ(parse_scheme("egalitarian:0.8").Describe(), "egalitarian:0.8");
  EXPECT_EQ(parse_scheme("shifted:1").Describe(), "shifted:1");
  EXPECT_THROW(parse_scheme("table"), Error);
  EXPECT_THROW(parse_scheme("egalitarian:1.5"), Error);
  EXPECT_THROW(parse_scheme("egalitarian:x"), Error);
  EXPECT_THROW(parse_scheme("median"), Error);
  EXPECT_EQ(parse_scheme("table", CustomTable{{{0, 0}}}).Describe(), "table");
}

TEST(DocumentTest, RoundTripsBundledDocuments) {
  for (const auto& [stem, doc] : bundled_documents()) {
    const std::string text = dump_economy(doc);
    const EconomyDocument back = parse_economy(text, stem);
    EXPECT_TRUE(SameDocument(doc, back)) << stem;
    EXPECT_EQ(dump_economy(back), text) << stem;
  }
}

TEST(DocumentTest, SaveAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "fairgame_document_test";
  std::filesystem::remove_all(dir);
  export_corpus(dir);
  for (const auto& [stem, doc] : bundled_documents()) {
    const auto path = dir / (stem + ".econ");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_TRUE(SameDocument(doc, load_economy(path))) << stem;
  }
  EXPECT_THROW(load_economy(dir / "missing.econ"), DocumentError);
  std::filesystem::remove_all(dir);
}

TEST(DocumentTest, SurplusFromPayoffRowSums) {
  const std::string text = R"({
    "agents": [{"name": "A", "actions": ["x", "y"]}],
    "payoffs": [
      {"profile": {"A": "x"}, "values": [0]},
      {"profile": {"A": "y"}, "values": [4]}
    ]
  })";
  const EconomyDocument doc = parse_economy(text);
  EXPECT_EQ(doc.economy.surplus({1}), 4.0);
  EXPECT_EQ(document_scheme(doc).Describe(), "table");
}

}  // namespace
}  // namespace fairgame
