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

#include "deprov/error.h"
#include "deprov/fixtures.h"
#include "deprov/json_io.h"
#include "deprov/provn.h"

namespace deprov {
namespace {

using nlohmann::json;

QualifiedName q(std::string_view text) { return QualifiedName::parse(text); }

SchemaError schema_failure(const std::string& text) {
  try {
    parse_json(text);
  } catch (const SchemaError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return SchemaError(ErrorCode::kSchemaError, "", "");
}

TEST(JsonTest, EmptyDocumentLayout) {
  json j = json::parse(serialize_json(ProvDocument()));
  EXPECT_EQ(j["mode"], "bundles+");
  EXPECT_EQ(j["prefixes"], json::object());
  for (const char* key : {"environments", "elements", "relations",
                          "contracts", "controls", "annotations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(JsonTest, FixturesRoundTrip) {
  for (FixtureId id : kAllFixtures) {
    for (EncodingMode mode : kAllModes) {
      SCOPED_TRACE(std::string(to_string(id)) + " " +
                   std::string(to_string(mode)));
      ProvDocument doc = build_fixture(id, mode).document;
      std::string text = serialize_json(doc);
      ProvDocument back = parse_json(text);
      EXPECT_EQ(back, doc);
      EXPECT_EQ(serialize_json(back), text);
    }
  }
}

TEST(JsonTest, EnvironmentsNestLikeTheForest) {
  json j = json::parse(serialize_json(gond_nrds_fixture()));
  ASSERT_TRUE(j["environments"].contains("genv:bu"));
  EXPECT_TRUE(j["environments"]["genv:bu"]["children"].contains("genv:nrds"));
  EXPECT_FALSE(j["environments"].contains("genv:nrds"));
}

TEST(JsonTest, AttributeValueForms) {
  ProvDocument doc;
  doc.declare_namespace("x", "http://x.org/");
  doc.add_element({ElementKind::kEntity, q("x:e"),
                   {{q("x:s"), AttributeValue("text")},
                    {q("x:n"), AttributeValue(7)},
                    {q("x:q"), AttributeValue(q("x:other"))},
                    {q("x:t"), AttributeValue("2024-01-01T00:00:00Z",
                                              q("xsd:dateTime"))}},
                   {}, {}});
  json j = json::parse(serialize_json(doc));
  const json& attrs = j["elements"][0]["attributes"];
  EXPECT_EQ(attrs["x:s"], "text");
  EXPECT_EQ(attrs["x:n"], 7);
  EXPECT_EQ(attrs["x:q"], (json{{"$", "x:other"},
                                {"type", "prov:QUALIFIED_NAME"}}));
  EXPECT_EQ(attrs["x:t"], (json{{"$", "2024-01-01T00:00:00Z"},
                                {"type", "xsd:dateTime"}}));
  EXPECT_EQ(parse_json(j.dump()), doc);
}

TEST(JsonTest, UnknownRelationKindHasPath) {
  SchemaError e = schema_failure(R"({
    "mode": "bundles+",
    "prefixes": {"x": "http://x.org/"},
    "relations": [
      {"kind": "used", "subject": "x:a", "object": "x:e"},
      {"kind": "wasStartedBy", "subject": "x:a", "object": "x:e"}
    ]
  })");
  EXPECT_EQ(e.path(), "/relations/1/kind");
  EXPECT_EQ(e.code(), ErrorCode::kUnknownRelationKind);
}

TEST(JsonTest, UnknownMode) {
  EXPECT_EQ(schema_failure(R"({"mode": "rdf"})").path(), "/mode");
}

// A missing member is reported at the path it should have had.
TEST(JsonTest, MissingMode) {
  SchemaError e = schema_failure(R"({"prefixes": {}})");
  EXPECT_EQ(e.path(), "/mode");
  EXPECT_NE(std::string(e.what()).find("missing"), std::string::npos)
      << e.what();
}

TEST(JsonTest, UnknownTopLevelMember) {
  EXPECT_EQ(schema_failure(R"({"mode": "bundle", "extra": 1})").path(),
            "/extra");
}

TEST(JsonTest, BadElementKind) {
  SchemaError e = schema_failure(R"({
    "mode": "bundle", "prefixes": {"x": "http://x.org/"},
    "elements": [{"kind": "collection", "id": "x:c"}]})");
  EXPECT_EQ(e.path(), "/elements/0/kind");
}

TEST(JsonTest, MalformedIdentifier) {
  SchemaError e = schema_failure(R"({
    "mode": "bundle", "prefixes": {"x": "http://x.org/"},
    "elements": [{"kind": "entity", "id": "no colon"}]})");
  EXPECT_EQ(e.path(), "/elements/0/id");
}

TEST(JsonTest, UndeclaredPrefix) {
  SchemaError e = schema_failure(R"({
    "mode": "bundle",
    "elements": [{"kind": "entity", "id": "x:e"}]})");
  EXPECT_EQ(e.path(), "/elements/0/id");
  EXPECT_EQ(e.code(), ErrorCode::kUnresolvedPrefix);
}

TEST(JsonTest, EscapedPointerSegments) {
  SchemaError e = schema_failure(R"({
    "mode": "bundles+", "prefixes": {"x": "http://x.org/"},
    "environments": {"x:a": {"attributes": {"x:k": {"$": 1}}}}})");
  EXPECT_EQ(e.path().rfind("/environments/x:a/attributes", 0), 0u)
      << e.path();
}

TEST(JsonTest, NotJson) {
  SchemaError e = schema_failure("{ not json");
  EXPECT_EQ(e.code(), ErrorCode::kParseError);
}

TEST(JsonTest, ModeGatingInStrictParse) {
  SchemaError e = schema_failure(R"({
    "mode": "bundle",
    "prefixes": {"x": "http://x.org/"},
    "environments": {"x:bu": {"children": {"x:nrds": {}}}}})");
  EXPECT_EQ(e.code(), ErrorCode::kNestingUnsupported);
  EXPECT_EQ(e.path().rfind("/environments/x:bu/children/x:nrds", 0), 0u)
      << e.path();
}

TEST(JsonTest, LenientParseKeepsUnsupportedContent) {
  std::string text = R"({
    "mode": "bundle",
    "prefixes": {"x": "http://x.org/"},
    "environments": {"x:bu": {"children": {"x:nrds": {}}}}})";
  ParseOptions lenient;
  lenient.enforce_mode = false;
  ProvDocument doc = parse_json(text, lenient);
  EXPECT_EQ(doc.environment(q("x:nrds"))->parent, q("x:bu"));
}

TEST(JsonTest, TextAndJsonAgree) {
  for (FixtureId id : kAllFixtures) {
    ProvDocument doc = build_fixture(id, EncodingMode::kNamespacesPlus).document;
    EXPECT_EQ(parse_json(serialize_json(parse_document(serialize_provn(doc)))),
              doc);
  }
}

}  // namespace
}  // namespace deprov
