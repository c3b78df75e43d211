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

#include "fault_suite.h"

#include <nlohmann/json.hpp>

#include "deprov/fixtures.h"
#include "deprov/json_io.h"
#include "deprov/provn.h"

namespace deprov::testing {

namespace {

using nlohmann::json;

QualifiedName q(std::string_view text) { return QualifiedName::parse(text); }

ProvDocument gond() { return gond_nrds_fixture(EncodingMode::kBundlesPlus); }
ProvDocument clinical() {
  return clinical_trial_fixture(EncodingMode::kBundlesPlus);
}

ProvDocument lenient_json(const json& j) {
  ParseOptions options;
  options.enforce_mode = false;
  return parse_json(j.dump(), options);
}

// Rewrites one element in the JSON form and re-reads it as written.
ProvDocument edit_element(const ProvDocument& doc, std::string_view id,
                          const std::function<void(json&)>& edit) {
  json j = json::parse(serialize_json(doc));
  for (json& el : j["elements"]) {
    if (el["id"] == id) edit(el);
  }
  return lenient_json(j);
}

Element entity(std::string_view id, Attributes attrs = {}) {
  return {ElementKind::kEntity, q(id), std::move(attrs), {}, {}};
}

Relation rel(RelationKind kind, std::string_view s, std::string_view o,
             std::optional<std::string_view> id = std::nullopt) {
  Relation r{kind, q(s), q(o), {}, {}};
  if (id) r.id = q(*id);
  return r;
}

std::vector<Mutant> uniqueness() {
  return {
      {"EntityRedeclaredWithOtherAttributes", Category::kUniqueness,
       [] {
         ProvDocument d = gond();
         d.insert_element(
             entity("gond:entity_001",
                    {{q("de:description"), AttributeValue("other dataset")}}),
             q("genv:gond"));
         return d;
       }},
      {"RelationIdReused", Category::kUniqueness,
       [] {
         ProvDocument d = gond();
         d.insert_relation(rel(RelationKind::kUsed, "lab1:analysis_t4",
                               "gond:shared_dataset", "nrds:flow_gond_nrds"));
         return d;
       }},
      {"TwoPrefixesSameUri", Category::kUniqueness,
       [] {
         ProvDocument d = gond();
         d.declare_namespace("gov", "http://global-env.com/gond/");
         d.insert_element(entity("gov:entity_001"));
         return d;
       }},
      {"ActivityWithOtherTimes", Category::kUniqueness,
       [] {
         ProvDocument d = clinical();
         d.insert_element({ElementKind::kActivity, q("pharcomp:extract_t3"),
                           {{time_label_key(), AttributeValue("t3")}},
                           "2024-05-01T00:00:00Z", std::nullopt},
                          q("ct:pharcomp"));
         return d;
       }},
  };
}

std::vector<Mutant> ordering() {
  return {
      {"UsageBeforeGeneration", Category::kOrdering,
       [] {
         ProvDocument d = gond();
         d.insert_element({ElementKind::kActivity, q("lab1:preview_t0"),
                           {{time_label_key(), AttributeValue("t0")}},
                           std::nullopt, std::nullopt},
                          q("genv:lab1"));
         d.insert_relation(rel(RelationKind::kUsed, "lab1:preview_t0",
                               "nrds:controlled_dataset"));
         return d;
       }},
      {"StartAfterEnd", Category::kOrdering,
       [] {
         ProvDocument d = clinical();
         d.insert_element({ElementKind::kActivity, q("open:review"), {},
                           "2024-03-02T00:00:00Z", "2024-03-01T00:00:00Z"},
                          q("ct:open"));
         return d;
       }},
      {"TimeLabelChanged", Category::kOrdering,
       [] {
         return edit_element(gond(), "gond:process_t1", [](json& el) {
           el["attributes"]["de:timeLabel"] = "t9";
         });
       }},
      {"ClinicalLabelsSwapped", Category::kOrdering,
       [] {
         return edit_element(clinical(), "phl:analysis_t5", [](json& el) {
           el["attributes"]["de:timeLabel"] = "t2";
         });
       }},
  };
}

std::vector<Mutant> impossibility() {
  return {
      {"DerivationCycle", Category::kImpossibility,
       [] {
         ProvDocument d = gond();
         d.insert_relation(rel(RelationKind::kWasDerivedFrom,
                               "gond:entity_001", "open:public_aggregates"));
         return d;
       }},
      {"SelfCommunication", Category::kImpossibility,
       [] {
         ProvDocument d = gond();
         d.insert_relation(rel(RelationKind::kWasInformedBy, "gond:process_t1",
                               "gond:process_t1"));
         return d;
       }},
      {"EnvironmentIdAsEntity", Category::kImpossibility,
       [] {
         ProvDocument d = gond();
         d.insert_element(entity("genv:nrds"));
         return d;
       }},
      {"NestedFixtureForcedToPlainBundle", Category::kImpossibility,
       [] {
         ParseOptions options;
         options.enforce_mode = false;
         options.mode_override = EncodingMode::kBundle;
         return parse_document(serialize_provn(gond()), options);
       }},
      {"ContainmentCycle", Category::kImpossibility,
       [] {
         ProvDocument d = gond();
         d.mutable_environment(q("genv:bu"))->parent = q("genv:nrds");
         return d;
       }},
  };
}

std::vector<Mutant> typing() {
  return {
      {"GenerationSwapped", Category::kTyping,
       [] {
         ProvDocument d = gond();
         d.insert_relation(rel(RelationKind::kWasGeneratedBy,
                               "gond:process_t1", "gond:shared_dataset"));
         return d;
       }},
      {"UsageSwapped", Category::kTyping,
       [] {
         ProvDocument d = clinical();
         d.insert_relation(rel(RelationKind::kUsed, "pharcomp:extracted_data",
                               "pharcomp:extract_t3"));
         return d;
       }},
      {"DelegationFromActivity", Category::kTyping,
       [] {
         ProvDocument d = gond();
         d.insert_relation(rel(RelationKind::kActedOnBehalfOf,
                               "gond:process_t1", "gond:ag_controller"));
         return d;
       }},
      {"EntityAlsoAgent", Category::kTyping,
       [] {
         ProvDocument d = gond();
         d.insert_element({ElementKind::kAgent, q("gond:entity_001"), {},
                           std::nullopt, std::nullopt});
         return d;
       }},
  };
}

std::vector<Mutant> nesting() {
  return {
      {"ElementInTwoEnvironments", Category::kNesting,
       [] {
         ProvDocument d = gond();
         d.assign_member(q("genv:nrds"), q("gond:entity_001"));
         return d;
       }},
      {"DanglingParent", Category::kNesting,
       [] {
         ProvDocument d = gond();
         d.mutable_environment(q("genv:lab1"))->parent = q("genv:missing");
         return d;
       }},
      {"NamespaceUriMissingParentSegment", Category::kNesting,
       [] {
         ProvDocument d = gond_nrds_fixture(EncodingMode::kNamespacesPlus);
         d.mutable_environment(q("genv:nrds"))->uri =
             "http://global-env.com/nrds/";
         return d;
       }},
      {"MemberWithoutElement", Category::kNesting,
       [] {
         ProvDocument d = clinical();
         d.assign_member(q("ct:capturedata"), q("capturedata:ghost"));
         return d;
       }},
  };
}

}  // namespace

std::vector<Mutant> all_mutants() {
  std::vector<Mutant> out;
  for (auto group : {uniqueness(), ordering(), impossibility(), typing(),
                     nesting()}) {
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

}  // namespace deprov::testing
