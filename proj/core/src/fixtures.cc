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

#include "deprov/fixtures.h"

#include <set>

#include "deprov/environment.h"

namespace deprov {

std::string_view to_string(FixtureId id) {
  return id == FixtureId::kGondNrds ? "gond-nrds" : "clinical-trial";
}

std::optional<FixtureId> parse_fixture_id(std::string_view text) {
  for (FixtureId id : kAllFixtures) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

namespace {

QualifiedName q(std::string_view text) { return QualifiedName::parse(text); }

// Builds through the checked operations, dropping what the mode lacks.
class Builder {
 public:
  explicit Builder(EncodingMode mode) : doc_(mode) {}

  void prefix(const std::string& name, const std::string& uri) {
    doc_.declare_namespace(name, uri);
  }

  void environment(std::string_view id, Attributes attributes = {},
                   std::optional<std::string_view> parent = std::nullopt) {
    std::optional<QualifiedName> parent_id;
    if (parent && allowed(Requirement::kR2NestedEnvironments)) {
      parent_id = q(*parent);
    }
    if (!attributes.empty() &&
        !allowed(Requirement::kR3EnvironmentAttributes)) {
      attributes.clear();
    }
    create_environment(doc_, q(id), attributes, parent_id);
  }

  void entity(std::string_view id, std::string_view env,
              Attributes attributes = {}) {
    add(ElementKind::kEntity, id, env, std::move(attributes));
  }
  void agent(std::string_view id, std::string_view env,
             Attributes attributes = {}) {
    add(ElementKind::kAgent, id, env, std::move(attributes));
  }
  void activity(std::string_view id, std::string_view env,
                std::string_view label) {
    add(ElementKind::kActivity, id, env,
        {{time_label_key(), AttributeValue(std::string(label))}});
  }

  void relation(RelationKind kind, std::string_view subject,
                std::string_view object,
                std::optional<std::string_view> id = std::nullopt) {
    Relation rel;
    rel.kind = kind;
    rel.subject = q(subject);
    rel.object = q(object);
    if (id) rel.id = q(*id);
    doc_.add_relation(std::move(rel));
  }

  // used + wasGeneratedBy + wasDerivedFrom + wasInformedBy for one step
  // that reads `input` (generated by `upstream`) and writes `output`.
  void step(std::string_view activity, std::string_view input,
            std::string_view output,
            std::optional<std::string_view> upstream,
            std::optional<std::string_view> flow_id = std::nullopt) {
    relation(RelationKind::kUsed, activity, input, flow_id);
    relation(RelationKind::kWasGeneratedBy, output, activity);
    relation(RelationKind::kWasDerivedFrom, output, input);
    if (upstream) relation(RelationKind::kWasInformedBy, activity, *upstream);
  }

  void relate(EnvironmentRelationKind kind, std::string_view subject,
              std::string_view object, Attributes attributes = {}) {
    if (!allowed(Requirement::kR4EnvironmentRelationships)) return;
    relate_environments(doc_, kind, q(subject), q(object), attributes);
  }

  void contract(std::string_view id, std::set<std::string_view> parties,
                Attributes terms, std::set<std::string_view> flows) {
    if (!allowed(Requirement::kR7Contracts)) return;
    std::set<QualifiedName> party_ids;
    for (auto p : parties) party_ids.insert(q(p));
    std::set<QualifiedName> flow_ids;
    for (auto f : flows) flow_ids.insert(q(f));
    record_contract(doc_, q(id), party_ids, terms, flow_ids);
  }

  void control(std::string_view holder, std::string_view target,
               ControlType type, ControlNature nature,
               Responsibility responsibility) {
    if (!allowed(Requirement::kR8AccessAndControl)) return;
    record_control(doc_, ControlRecord{q(holder), q(target), type, nature,
                                       responsibility});
  }

  void annotate(std::string_view relation_id, std::string_view meaning) {
    if (!allowed(Requirement::kR5RelationAnnotation)) return;
    annotate_relation(doc_, q(relation_id),
                      {{env_keys::meaning(), AttributeValue(std::string(meaning))}});
  }

  FixtureBuild finish() {
    FixtureBuild out{std::move(doc_), {}};
    for (Requirement req : omitted_) {
      out.warnings.push_back(
          std::string(code_of(req)) + " (" + std::string(name_of(req)) +
          ") omitted: " + std::string(to_string(out.document.mode())) +
          " cannot represent it");
    }
    return out;
  }

 private:
  bool allowed(Requirement req) {
    if (supports(doc_.mode(), req)) return true;
    omitted_.insert(req);
    return false;
  }

  void add(ElementKind kind, std::string_view id, std::string_view env,
           Attributes attributes) {
    Element el;
    el.kind = kind;
    el.id = q(id);
    el.attributes = std::move(attributes);
    doc_.add_element(std::move(el), q(env));
  }

  ProvDocument doc_;
  std::set<Requirement> omitted_;
};

Attributes environment_attributes(std::string_view type,
                                  std::string_view access) {
  return {{env_keys::env_type(), AttributeValue(std::string(type))},
          {env_keys::governance_access_type(),
           AttributeValue(std::string(access))}};
}

FixtureBuild gond_nrds(EncodingMode mode) {
  Builder b(mode);
  b.prefix("de", std::string(kDeNamespace));
  b.prefix("genv", "http://global-env.com/");
  b.prefix("gond", "http://global-env.com/gond/");
  b.prefix("bu", "http://global-env.com/bu/");
  b.prefix("nrds", "http://global-env.com/bu/nrds/");
  b.prefix("lab1", "http://global-env.com/lab1/");
  b.prefix("lab2", "http://global-env.com/lab2/");
  b.prefix("open", "http://global-env.com/open/");

  Attributes gond_attributes = environment_attributes("Government", "Restricted");
  gond_attributes[env_keys::governance_user_definition()] =
      AttributeValue("TrainedLevel2");
  gond_attributes[env_keys::infrastructure()] = AttributeValue("ISO27001");
  gond_attributes[env_keys::purpose()] =
      AttributeValue("national data collection with onward sharing for research");
  b.environment("genv:gond", gond_attributes);
  b.environment("genv:bu", environment_attributes("University", "Restricted"));
  b.environment("genv:nrds",
                environment_attributes("ResearchDataService", "Controlled"),
                "genv:bu");
  b.environment("genv:lab1", environment_attributes("ResearchLab", "Restricted"));
  b.environment("genv:lab2", environment_attributes("ResearchLab", "Restricted"));
  b.environment("genv:open", environment_attributes("Open", "Public"));

  // GOND: the origin dataset, processed at t1 for sharing and at t2 for
  // public release.
  b.entity("gond:entity_001", "genv:gond",
           {{de_name("description"), AttributeValue("national dataset")}});
  b.agent("gond:ag_controller", "genv:gond");
  b.agent("gond:ag_processor", "genv:gond");
  b.activity("gond:process_t1", "genv:gond", "t1");
  b.activity("gond:process_t2", "genv:gond", "t2");
  b.entity("gond:shared_dataset", "genv:gond");
  b.entity("gond:aggregate_stats", "genv:gond");
  b.step("gond:process_t1", "gond:entity_001", "gond:shared_dataset",
         std::nullopt);
  b.step("gond:process_t2", "gond:entity_001", "gond:aggregate_stats",
         std::nullopt);
  b.relation(RelationKind::kWasAssociatedWith, "gond:process_t1",
             "gond:ag_processor");
  b.relation(RelationKind::kWasAssociatedWith, "gond:process_t2",
             "gond:ag_processor");
  b.relation(RelationKind::kActedOnBehalfOf, "gond:ag_processor",
             "gond:ag_controller");

  b.entity("open:public_aggregates", "genv:open");
  b.relation(RelationKind::kWasDerivedFrom, "open:public_aggregates",
             "gond:aggregate_stats");

  // University and its research data service.
  b.agent("bu:ag_university", "genv:bu");
  b.agent("nrds:ag_controller_001", "genv:nrds");
  b.relation(RelationKind::kActedOnBehalfOf, "nrds:ag_controller_001",
             "bu:ag_university");
  b.activity("nrds:disclosure_control_t3", "genv:nrds", "t3");
  b.entity("nrds:controlled_dataset", "genv:nrds");
  b.step("nrds:disclosure_control_t3", "gond:shared_dataset",
         "nrds:controlled_dataset", "gond:process_t1", "nrds:flow_gond_nrds");
  b.relation(RelationKind::kWasAssociatedWith, "nrds:disclosure_control_t3",
             "nrds:ag_controller_001");
  b.annotate("nrds:flow_gond_nrds", "storeForOnwardSharing");

  // Two research labs, each analysing and publishing.
  struct Lab {
    const char* env;
    const char* prefix;
    const char* analysis_label;
    const char* publish_label;
    const char* publication;
  };
  for (const Lab& lab :
       {Lab{"genv:lab1", "lab1", "t4", "t6", "open:publication_lab1"},
        Lab{"genv:lab2", "lab2", "t5", "t7", "open:publication_lab2"}}) {
    std::string p(lab.prefix);
    std::string analysis = p + ":analysis_" + lab.analysis_label;
    std::string publish = p + ":publish_" + lab.publish_label;
    std::string results = p + ":results";
    std::string researcher = p + ":ag_researcher";
    b.agent(researcher, lab.env);
    b.activity(analysis, lab.env, lab.analysis_label);
    b.activity(publish, lab.env, lab.publish_label);
    b.entity(results, lab.env);
    b.entity(lab.publication, "genv:open");
    b.step(analysis, "nrds:controlled_dataset", results,
           "nrds:disclosure_control_t3", p + ":flow_nrds_" + p);
    b.step(publish, results, lab.publication, analysis);
    b.relation(RelationKind::kWasAssociatedWith, analysis, researcher);
    b.relation(RelationKind::kWasAssociatedWith, publish, researcher);
  }

  b.relate(EnvironmentRelationKind::kSharesDataWith, "genv:gond", "genv:nrds",
           {{de_name("channel"), AttributeValue("secureTransfer")}});

  b.contract("genv:contract_gond_nrds", {"genv:gond", "genv:nrds"},
             {{de_name("agreementType"), AttributeValue("DataSharingAgreement")}},
             {"nrds:flow_gond_nrds"});
  b.contract("genv:contract_nrds_labs", {"genv:nrds", "genv:lab1", "genv:lab2"},
             {{de_name("agreementType"), AttributeValue("DataAccessAgreement")}},
             {"lab1:flow_nrds_lab1", "lab2:flow_nrds_lab2"});

  for (const char* lab : {"genv:lab1", "genv:lab2"}) {
    b.control("genv:gond", lab, ControlType::kIndirect,
              ControlNature::kStrategic, Responsibility::kIndirect);
    b.control("genv:nrds", lab, ControlType::kDirect,
              ControlNature::kOperational, Responsibility::kDirect);
  }
  b.control("genv:gond", "genv:nrds", ControlType::kIndirect,
            ControlNature::kStrategic, Responsibility::kIndirect);
  b.control("gond:ag_controller", "genv:gond", ControlType::kDirect,
            ControlNature::kStrategic, Responsibility::kDirect);
  return b.finish();
}

FixtureBuild clinical_trial(EncodingMode mode) {
  Builder b(mode);
  b.prefix("de", std::string(kDeNamespace));
  b.prefix("ct", "http://clinical-env.org/");
  b.prefix("centres", "http://clinical-env.org/centres/");
  b.prefix("centre_a", "http://clinical-env.org/centres/centre_a/");
  b.prefix("centre_b", "http://clinical-env.org/centres/centre_b/");
  b.prefix("capturedata", "http://clinical-env.org/capturedata/");
  b.prefix("pharcomp", "http://clinical-env.org/pharcomp/");
  b.prefix("labs", "http://clinical-env.org/labs/");
  b.prefix("phl", "http://clinical-env.org/labs/public_health_lab/");
  b.prefix("open", "http://clinical-env.org/open/");

  b.environment("ct:centres", environment_attributes("ClinicalCentres", "Restricted"));
  b.environment("ct:centre_a", environment_attributes("TrialCentre", "Restricted"),
                "ct:centres");
  b.environment("ct:centre_b", environment_attributes("TrialCentre", "Restricted"),
                "ct:centres");
  b.environment("ct:capturedata",
                environment_attributes("DataCaptureService", "Restricted"));
  b.environment("ct:pharcomp", environment_attributes("Pharmaceutical", "Restricted"));
  b.environment("ct:labs", environment_attributes("ResearchLabs", "Restricted"));
  b.environment("ct:public_health_lab",
                environment_attributes("ResearchLab", "Restricted"), "ct:labs");
  b.environment("ct:open", environment_attributes("Open", "Public"));

  for (const char* centre : {"centre_a", "centre_b"}) {
    std::string p(centre);
    std::string env = "ct:" + p;
    b.agent(p + ":ag_investigator", env);
    b.activity(p + ":collect_t1", env, "t1");
    b.entity(p + ":trial_data", env,
             {{de_name("consent"), AttributeValue("explicit")}});
    b.relation(RelationKind::kWasGeneratedBy, p + ":trial_data",
               p + ":collect_t1");
    b.relation(RelationKind::kWasAssociatedWith, p + ":collect_t1",
               p + ":ag_investigator");
  }

  b.agent("capturedata:ag_operator", "ct:capturedata");
  b.activity("capturedata:upload_t2", "ct:capturedata", "t2");
  b.entity("capturedata:trial_database", "ct:capturedata");
  b.relation(RelationKind::kWasGeneratedBy, "capturedata:trial_database",
             "capturedata:upload_t2");
  b.relation(RelationKind::kWasAssociatedWith, "capturedata:upload_t2",
             "capturedata:ag_operator");
  for (const char* centre : {"centre_a", "centre_b"}) {
    std::string p(centre);
    std::string flow = "capturedata:flow_upload_" + p.substr(p.size() - 1);
    b.relation(RelationKind::kUsed, "capturedata:upload_t2", p + ":trial_data",
               flow);
    b.relation(RelationKind::kWasDerivedFrom, "capturedata:trial_database",
               p + ":trial_data");
    b.relation(RelationKind::kWasInformedBy, "capturedata:upload_t2",
               p + ":collect_t1");
    b.annotate(flow, "collectedAndStored");
  }

  b.agent("pharcomp:ag_analyst", "ct:pharcomp");
  b.activity("pharcomp:extract_t3", "ct:pharcomp", "t3");
  b.activity("pharcomp:share_t4", "ct:pharcomp", "t4");
  b.entity("pharcomp:extracted_data", "ct:pharcomp");
  b.entity("pharcomp:shared_dataset", "ct:pharcomp");
  b.step("pharcomp:extract_t3", "capturedata:trial_database",
         "pharcomp:extracted_data", "capturedata:upload_t2",
         "pharcomp:flow_extract");
  b.step("pharcomp:share_t4", "pharcomp:extracted_data",
         "pharcomp:shared_dataset", "pharcomp:extract_t3");
  b.relation(RelationKind::kWasAssociatedWith, "pharcomp:extract_t3",
             "pharcomp:ag_analyst");
  b.relation(RelationKind::kWasAssociatedWith, "pharcomp:share_t4",
             "pharcomp:ag_analyst");

  b.agent("phl:ag_researcher", "ct:public_health_lab");
  b.activity("phl:analysis_t5", "ct:public_health_lab", "t5");
  b.activity("phl:publish_t6", "ct:public_health_lab", "t6");
  b.entity("phl:results", "ct:public_health_lab");
  b.entity("open:journal_article", "ct:open");
  b.step("phl:analysis_t5", "pharcomp:shared_dataset", "phl:results",
         "pharcomp:share_t4", "phl:flow_share");
  b.step("phl:publish_t6", "phl:results", "open:journal_article",
         "phl:analysis_t5");
  b.relation(RelationKind::kWasAssociatedWith, "phl:analysis_t5",
             "phl:ag_researcher");
  b.relation(RelationKind::kWasAssociatedWith, "phl:publish_t6",
             "phl:ag_researcher");

  b.contract("ct:contract_centres_capturedata", {"ct:centres", "ct:capturedata"},
             {{de_name("agreementType"), AttributeValue("DataCollectionAgreement")}},
             {"capturedata:flow_upload_a", "capturedata:flow_upload_b"});
  b.contract("ct:contract_capturedata_pharcomp",
             {"ct:capturedata", "ct:pharcomp"},
             {{de_name("agreementType"), AttributeValue("DataExchangeAgreement")}},
             {"pharcomp:flow_extract"});
  b.contract("ct:contract_pharcomp_labs", {"ct:pharcomp", "ct:labs"},
             {{de_name("agreementType"), AttributeValue("CodeOfConduct")}},
             {"phl:flow_share"});

  b.control("ct:pharcomp", "ct:open", ControlType::kIndirect,
            ControlNature::kStrategic, Responsibility::kIndirect);
  b.control("ct:pharcomp", "ct:labs", ControlType::kDirect,
            ControlNature::kOperational, Responsibility::kDirect);
  return b.finish();
}

}  // namespace

FixtureBuild build_fixture(FixtureId id, EncodingMode mode) {
  return id == FixtureId::kGondNrds ? gond_nrds(mode) : clinical_trial(mode);
}

ProvDocument gond_nrds_fixture(EncodingMode mode) {
  return build_fixture(FixtureId::kGondNrds, mode).document;
}

ProvDocument clinical_trial_fixture(EncodingMode mode) {
  return build_fixture(FixtureId::kClinicalTrial, mode).document;
}

}  // namespace deprov
