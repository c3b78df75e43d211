// Copyright 2026 The deprov Authors
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

#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "deprov/environment.h"
#include "deprov/error.h"
#include "deprov/fixtures.h"
#include "deprov/flatten.h"
#include "deprov/provn.h"
#include "deprov/reasoning.h"

namespace deprov {
namespace {

QualifiedName q(std::string_view text) { return QualifiedName::parse(text); }

// Deepest bundle nesting in a text, counted by keyword balance.
int max_bundle_depth(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int depth = 0, best = 0;
  std::regex open(R"(^\s*bundle\b)"), close(R"(^\s*endBundle\b)");
  while (std::getline(in, line)) {
    if (std::regex_search(line, open)) best = std::max(best, ++depth);
    if (std::regex_search(line, close)) --depth;
  }
  return best;
}

std::string without_mode_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find("@mode") != std::string::npos) continue;
    out += line + "\n";
  }
  return out;
}

TEST(FlattenTest, SingleEnvironmentIsFixpoint) {
  ProvDocument doc(EncodingMode::kBundlesPlus);
  doc.declare_namespace("x", "http://x.org/");
  doc.declare_namespace("genv", "http://global-env.com/");
  create_environment(doc, q("genv:only"));
  doc.add_element({ElementKind::kEntity, q("x:e"), {}, {}, {}},
                  q("genv:only"));
  doc.add_element({ElementKind::kActivity, q("x:a"), {}, {}, {}},
                  q("genv:only"));
  doc.add_relation({RelationKind::kUsed, q("x:a"), q("x:e"), {}, {}});
  doc.add_element({ElementKind::kAgent, q("x:outside"), {}, {}, {}});
  std::string flat = export_flattened(doc);
  EXPECT_EQ(flat, without_mode_line(serialize_provn(doc)));
  EXPECT_EQ(import_flattened(flat), doc);
}

TEST(FlattenTest, GondNrdsHasNoNestedBundles) {
  ProvDocument doc = gond_nrds_fixture();
  std::string flat = export_flattened(doc);
  EXPECT_EQ(max_bundle_depth(serialize_provn(doc)), 2);
  EXPECT_EQ(max_bundle_depth(flat), 1);
  EXPECT_EQ(flat.find("@"), std::string::npos);
  EXPECT_NE(flat.find("wasInfluencedBy(genv:nrds, genv:bu, "
                      "[prov:type='de:containedIn'])"),
            std::string::npos);
}

TEST(FlattenTest, FlatOutputIsPlainBundleDocument) {
  // Standard readers see it as an ordinary document.
  ProvDocument plain = parse_document(export_flattened(gond_nrds_fixture()));
  EXPECT_EQ(plain.mode(), EncodingMode::kBundle);
  for (const auto& [id, env] : plain.environments()) {
    EXPECT_FALSE(env.parent) << id;
    EXPECT_TRUE(env.attributes.empty()) << id;
  }
}

TEST(FlattenTest, GondNrdsReimportIsIsomorphic) {
  ProvDocument doc = gond_nrds_fixture();
  ProvDocument back = import_flattened(export_flattened(doc));
  EXPECT_EQ(environment_graph(back), environment_graph(doc));
  EXPECT_EQ(back, doc);
}

TEST(FlattenTest, ClinicalReimport) {
  ProvDocument doc = clinical_trial_fixture();
  EXPECT_EQ(import_flattened(export_flattened(doc)), doc);
}

TEST(FlattenTest, ContractBecomesEntityAndPartyRelations) {
  ProvDocument doc(EncodingMode::kBundlesPlus);
  doc.declare_namespace("genv", "http://global-env.com/");
  doc.declare_namespace("de", "http://example.org/de-prov/ns#");
  create_environment(doc, q("genv:gond"));
  create_environment(doc, q("genv:nrds"));
  record_contract(doc, q("genv:dsa"), {q("genv:gond"), q("genv:nrds")},
                  {{q("de:agreementType"), AttributeValue("DSA")}});
  std::string flat = export_flattened(doc);
  ProvDocument plain = parse_document(flat);
  const Element* contract = plain.lookup(q("genv:dsa"));
  ASSERT_NE(contract, nullptr);
  EXPECT_EQ(contract->kind, ElementKind::kEntity);
  EXPECT_EQ(contract->attributes.at(q("prov:type")),
            AttributeValue(q("de:Contract")));
  int parties = 0;
  for (const Relation& r : plain.relations()) {
    auto type = r.attributes.find(q("prov:type"));
    if (r.subject == q("genv:dsa") && type != r.attributes.end() &&
        type->second == AttributeValue(q("de:party"))) {
      ++parties;
    }
  }
  EXPECT_EQ(parties, 2);
  EXPECT_EQ(import_flattened(flat), doc);
}

TEST(FlattenTest, RequiresBundlesPlus) {
  for (EncodingMode mode : {EncodingMode::kBundle, EncodingMode::kNamespace,
                            EncodingMode::kNamespacesPlus}) {
    try {
      export_flattened(gond_nrds_fixture(mode));
      ADD_FAILURE() << to_string(mode);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
    }
  }
}

}  // namespace
}  // namespace deprov
