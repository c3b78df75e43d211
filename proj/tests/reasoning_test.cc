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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "deprov/environment.h"
#include "deprov/error.h"
#include "deprov/fixtures.h"
#include "deprov/provn.h"
#include "deprov/reasoning.h"

namespace deprov {
namespace {

QualifiedName q(std::string_view text) { return QualifiedName::parse(text); }

std::set<QualifiedName> ids(const ChainResult& chain) {
  std::set<QualifiedName> out;
  for (const auto& node : chain.reached) out.insert(node.id);
  return out;
}

TEST(ChainTest, BackwardFromLabPublicationFindsSourceAndContract) {
  ProvDocument doc = gond_nrds_fixture();
  ChainResult chain = backward_chain(doc, q("open:publication_lab1"));
  EXPECT_TRUE(chain.contains(q("gond:entity_001")));
  EXPECT_TRUE(chain.contracts.contains(q("genv:contract_gond_nrds")));
  EXPECT_TRUE(chain.contracts.contains(q("genv:contract_nrds_labs")));
  std::set<std::pair<QualifiedName, QualifiedName>> boundaries;
  for (const Crossing& c : chain.crossings) {
    boundaries.insert({*c.from_environment, *c.to_environment});
  }
  EXPECT_TRUE(boundaries.contains({q("genv:gond"), q("genv:nrds")}));
  EXPECT_TRUE(boundaries.contains({q("genv:nrds"), q("genv:lab1")}));
  EXPECT_TRUE(boundaries.contains({q("genv:lab1"), q("genv:open")}));
  // The other lab's work is not upstream.
  EXPECT_FALSE(chain.contains(q("lab2:results")));
}

TEST(ChainTest, BackwardFromSourceIsItself) {
  ChainResult chain = backward_chain(gond_nrds_fixture(), q("gond:entity_001"));
  EXPECT_EQ(ids(chain), (std::set<QualifiedName>{q("gond:entity_001")}));
  EXPECT_TRUE(chain.crossings.empty());
  EXPECT_TRUE(chain.contracts.empty());
}

TEST(ChainTest, ForwardFromSourceReachesOpenTwoWays) {
  ChainResult chain = forward_chain(gond_nrds_fixture(), q("gond:entity_001"));
  EXPECT_TRUE(chain.contains(q("open:public_aggregates")));
  EXPECT_TRUE(chain.contains(q("open:publication_lab1")));
  EXPECT_TRUE(chain.contains(q("open:publication_lab2")));
  std::set<QualifiedName> entries_into_open;
  for (const Crossing& c : chain.crossings) {
    if (c.to_environment == q("genv:open")) {
      entries_into_open.insert(*c.from_environment);
    }
  }
  // Directly from the government office, and through the labs.
  EXPECT_TRUE(entries_into_open.contains(q("genv:gond")));
  EXPECT_TRUE(entries_into_open.contains(q("genv:lab1")));
}

TEST(ChainTest, ForwardFromSinkIsItself) {
  ChainResult chain =
      forward_chain(gond_nrds_fixture(), q("open:publication_lab1"));
  EXPECT_EQ(ids(chain), (std::set<QualifiedName>{q("open:publication_lab1")}));
}

TEST(ChainTest, HopsAndEnvironments) {
  ChainResult chain = forward_chain(gond_nrds_fixture(), q("gond:entity_001"));
  EXPECT_EQ(chain.reached.front().id, q("gond:entity_001"));
  EXPECT_EQ(chain.reached.front().hops, 0u);
  EXPECT_EQ(chain.hops_to(q("gond:shared_dataset")), 1u);
  for (const ReachedNode& node : chain.reached) {
    if (node.id == q("nrds:controlled_dataset")) {
      EXPECT_EQ(node.environment, q("genv:nrds"));
    }
  }
}

TEST(ChainTest, AgentsAreNotDataFlow) {
  ChainResult chain = forward_chain(gond_nrds_fixture(), q("gond:entity_001"));
  EXPECT_FALSE(chain.contains(q("gond:ag_processor")));
  EXPECT_FALSE(chain.contains(q("gond:ag_controller")));
}

TEST(ChainTest, SharesDataWithConnectsEnvironments) {
  ChainResult chain = forward_chain(gond_nrds_fixture(), q("genv:gond"));
  EXPECT_TRUE(chain.contains(q("genv:nrds")));
}

TEST(ChainTest, UnknownNode) {
  try {
    forward_chain(gond_nrds_fixture(), q("gond:nothing"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownNode);
  }
}

TEST(ChainTest, JsonShape) {
  auto j = nlohmann::json::parse(chain_to_json(
      backward_chain(gond_nrds_fixture(), q("open:publication_lab1"))));
  EXPECT_EQ(j["origin"], "open:publication_lab1");
  EXPECT_TRUE(j["reached"].is_array());
  EXPECT_TRUE(j["crossings"].is_array());
  EXPECT_NE(std::find(j["contracts"].begin(), j["contracts"].end(),
                      "genv:contract_gond_nrds"),
            j["contracts"].end());
}

// --- control ---

TEST(ControllersTest, LabControllers) {
  ProvDocument doc = gond_nrds_fixture();
  std::vector<ControllerEntry> entries = controllers_of(doc, q("genv:lab1"));
  ASSERT_EQ(entries.size(), 2u);
  std::map<QualifiedName, ControlRecord> by_holder;
  for (const auto& e : entries) {
    EXPECT_FALSE(e.transitive);
    by_holder[e.record.holder] = e.record;
  }
  const ControlRecord& nrds = by_holder.at(q("genv:nrds"));
  EXPECT_EQ(nrds.control_type, ControlType::kDirect);
  EXPECT_EQ(nrds.control_nature, ControlNature::kOperational);
  EXPECT_EQ(nrds.responsibility, Responsibility::kDirect);
  const ControlRecord& gond = by_holder.at(q("genv:gond"));
  EXPECT_EQ(gond.control_type, ControlType::kIndirect);
  EXPECT_EQ(gond.control_nature, ControlNature::kStrategic);
  EXPECT_EQ(gond.responsibility, Responsibility::kIndirect);
}

TEST(ControllersTest, NoRecordsNoAncestors) {
  EXPECT_TRUE(controllers_of(gond_nrds_fixture(), q("genv:open")).empty());
}

TEST(ControllersTest, NestedEnclaveInheritsTransitively) {
  ProvDocument doc(EncodingMode::kBundlesPlus);
  doc.declare_namespace("e", "http://e.org/");
  create_environment(doc, q("e:a"));
  create_environment(doc, q("e:b"), {}, q("e:a"));
  create_environment(doc, q("e:enclave"), {}, q("e:b"));
  create_environment(doc, q("e:x"));
  create_environment(doc, q("e:y"));
  create_environment(doc, q("e:z"));
  record_control(doc, {q("e:x"), q("e:a"), ControlType::kIndirect,
                       ControlNature::kStrategic, Responsibility::kIndirect});
  record_control(doc, {q("e:y"), q("e:b")});
  record_control(doc, {q("e:z"), q("e:enclave")});

  // Oracle: walk parent links by hand, collecting records per level.
  std::vector<ControllerEntry> expected;
  std::optional<QualifiedName> level = q("e:enclave");
  bool inherited = false;
  while (level) {
    for (const ControlRecord& r : doc.controls()) {
      if (r.target == *level) {
        expected.push_back({r, inherited,
                            inherited ? level : std::nullopt});
      }
    }
    level = doc.environment(*level)->parent;
    inherited = true;
  }
  EXPECT_EQ(controllers_of(doc, q("e:enclave")), expected);
  ASSERT_EQ(expected.size(), 3u);
  EXPECT_EQ(expected[1].via, q("e:b"));
}

TEST(ControllersTest, UnknownEnvironment) {
  try {
    controllers_of(gond_nrds_fixture(), q("genv:none"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownEnvironment);
  }
}

// --- support table ---

TEST(SupportTest, SpotChecks) {
  EXPECT_FALSE(supports(EncodingMode::kBundle,
                        Requirement::kR2NestedEnvironments));
  EXPECT_FALSE(supports(EncodingMode::kNamespace,
                        Requirement::kR4EnvironmentRelationships));
  EXPECT_TRUE(supports(EncodingMode::kBundlesPlus, Requirement::kR7Contracts));
}

TEST(SupportTest, MatrixTextLayout) {
  std::string text = support_matrix_text();
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_NE(lines[0].find("Bundle"), std::string::npos);
  EXPECT_NE(lines[0].find("Namespace+"), std::string::npos);
  EXPECT_NE(lines[0].find("Bundles+"), std::string::npos);
  EXPECT_EQ(lines[1].rfind("R1", 0), 0u);
  EXPECT_EQ(lines[8].rfind("R8", 0), 0u);
}

TEST(SupportTest, MatrixJson) {
  auto j = nlohmann::json::parse(support_matrix_json());
  ASSERT_EQ(j["requirements"].size(), 8u);
  EXPECT_EQ(j["requirements"][1]["support"]["Bundle"], false);
  EXPECT_EQ(j["requirements"][1]["support"]["Namespace"], true);
}

// --- assessment ---

TEST(AssessTest, GondNrdsAllSupported) {
  Assessment a = assess_document(gond_nrds_fixture());
  EXPECT_TRUE(a.adequate());
  for (const auto& row : a.rows) {
    EXPECT_TRUE(row.exercised) << code_of(row.requirement);
    EXPECT_TRUE(row.supported) << code_of(row.requirement);
  }
}

TEST(AssessTest, ClinicalHasNoEnvironmentRelationships) {
  Assessment a = assess_document(clinical_trial_fixture());
  EXPECT_TRUE(a.adequate());
  for (const auto& row : a.rows) {
    EXPECT_EQ(row.exercised,
              row.requirement != Requirement::kR4EnvironmentRelationships)
        << code_of(row.requirement);
  }
}

TEST(AssessTest, NestedDocumentForcedToBundle) {
  ParseOptions options;
  options.enforce_mode = false;
  options.mode_override = EncodingMode::kBundle;
  ProvDocument doc =
      parse_document(serialize_provn(gond_nrds_fixture()), options);
  Assessment a = assess_document(doc);
  EXPECT_FALSE(a.adequate());
  const RequirementUse& r2 = a.rows[1];
  EXPECT_TRUE(r2.exercised);
  EXPECT_FALSE(r2.supported);
  ASSERT_FALSE(a.problems.empty());
  EXPECT_EQ(a.problems[0].rfind("R2", 0), 0u);
  EXPECT_NE(a.problems[0].find("bundles+"), std::string::npos);
}

TEST(AssessTest, MonotoneInMode) {
  for (FixtureId id : kAllFixtures) {
    for (auto [plain, plus] :
         {std::pair{EncodingMode::kBundle, EncodingMode::kBundlesPlus},
          std::pair{EncodingMode::kNamespace, EncodingMode::kNamespacesPlus}}) {
      ProvDocument doc = build_fixture(id, EncodingMode::kBundlesPlus).document;
      doc.force_mode(plain);
      Assessment before = assess_document(doc);
      doc.force_mode(plus);
      Assessment after = assess_document(doc);
      for (std::size_t i = 0; i < before.rows.size(); ++i) {
        EXPECT_TRUE(!before.rows[i].supported || after.rows[i].supported);
      }
      EXPECT_LE(after.problems.size(), before.problems.size());
    }
  }
}

TEST(EnvironmentGraphTest, EncodingsAgree) {
  for (FixtureId id : kAllFixtures) {
    ProvDocument a = build_fixture(id, EncodingMode::kBundlesPlus).document;
    ProvDocument b = build_fixture(id, EncodingMode::kNamespacesPlus).document;
    EXPECT_EQ(environment_graph(a), environment_graph(b));
    EXPECT_TRUE(equivalent_content(a, b));
    EXPECT_NE(a, b);
  }
}

}  // namespace
}  // namespace deprov
