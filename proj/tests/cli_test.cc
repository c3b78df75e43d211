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


// Runs the deprov binary end to end.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "deprov/fixtures.h"
#include "deprov/json_io.h"
#include "deprov/provn.h"
#include "deprov/reasoning.h"
#include "dot_parser.h"
#include "fault_suite.h"

namespace deprov::testing {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  fs::path dir = DEPROV_CLI_SCRATCH;
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

RunResult run(const std::string& args) {
  fs::path err_file = scratch() / "stderr.txt";
  std::string command = std::string("DE_PROV_COLOR=never \"") +
                        DEPROV_CLI_PATH + "\" " + args + " 2>\"" +
                        err_file.string() + "\"";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
    result.out.append(buffer, n);
  }
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = slurp(err_file);
  return result;
}

std::string fixture_file(const std::string& name, const std::string& args) {
  fs::path path = scratch() / name;
  RunResult r = run("fixture " + args + " -o \"" + path.string() + "\"");
  EXPECT_EQ(r.code, 0) << r.err;
  return path.string();
}

TEST(CliTest, FixtureThenValidate) {
  std::string path = fixture_file("gond.provn", "gond-nrds");
  RunResult r = run("validate \"" + path + "\"");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(parse_document(slurp(path)), gond_nrds_fixture());
}

TEST(CliTest, ValidateJsonReport) {
  std::string path = fixture_file("clinical.json", "clinical-trial --format json");
  RunResult r = run("validate \"" + path + "\" --format json");
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["findings"].empty());
}

TEST(CliTest, InvalidDocumentExitsOne) {
  for (const Mutant& m : all_mutants()) {
    if (m.category != Category::kTyping) continue;
    fs::path path = scratch() / (m.name + ".json");
    write_file(path, serialize_json(m.build()));
    RunResult r = run("validate \"" + path.string() + "\"");
    EXPECT_EQ(r.code, 1) << m.name << "\n" << r.err;
    EXPECT_NE(r.out.find("Typing"), std::string::npos) << r.out;
    RunResult j = run("validate \"" + path.string() + "\" --format json");
    EXPECT_EQ(j.code, 1);
    bool typing = false;
    auto report = nlohmann::json::parse(j.out);
    for (const auto& f : report["findings"]) {
      typing |= f["category"] == "Typing";
    }
    EXPECT_TRUE(typing) << m.name;
    return;
  }
  FAIL() << "no typing mutant";
}

TEST(CliTest, ParseErrorExitsTwo) {
  fs::path path = scratch() / "broken.provn";
  write_file(path, "document\n  entity(x:e,, )\nendDocument\n");
  RunResult r = run("validate \"" + path.string() + "\"");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("2:"), std::string::npos) << r.err;
}

TEST(CliTest, MissingInputExits66) {
  RunResult r = run("validate \"" + (scratch() / "nope.provn").string() + "\"");
  EXPECT_EQ(r.code, 66);
}

TEST(CliTest, UsageErrorsExit64) {
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("check").code, 64);
  EXPECT_EQ(run("fixture nothing").code, 64);
  std::string path = fixture_file("gond_usage.provn", "gond-nrds");
  EXPECT_EQ(run("query \"" + path + "\"").code, 64);
  EXPECT_EQ(run("query \"" + path + "\" --forward a:b --backward a:b").code, 64);
  EXPECT_EQ(run("convert \"" + path + "\" --to svg").code, 64);
}

TEST(CliTest, ConvertJsonToProvn) {
  std::string json = fixture_file("gond_rt.json", "gond-nrds --format json");
  fs::path provn = scratch() / "gond_rt.provn";
  RunResult r = run("convert \"" + json + "\" --to provn -o \"" +
                    provn.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(provn), serialize_provn(gond_nrds_fixture()));
  RunResult back = run("convert \"" + provn.string() + "\" --to json");
  EXPECT_EQ(back.out, slurp(json));
}

TEST(CliTest, ConvertToDot) {
  std::string path = fixture_file("gond_dot.provn", "gond-nrds");
  RunResult r = run("convert \"" + path + "\" --to dot --direction TB");
  ASSERT_EQ(r.code, 0) << r.err;
  DotDocument dot = parse_dot(r.out);
  EXPECT_EQ(dot.root.attributes.at("rankdir"), "TB");
  EXPECT_NE(dot.root.find("cluster_genv:nrds"), nullptr);
}

TEST(CliTest, ConvertFlat) {
  std::string path = fixture_file("gond_flat.provn", "gond-nrds");
  RunResult r = run("convert \"" + path + "\" --to flat");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find('@'), std::string::npos);
  std::string plain = fixture_file("gond_plain.provn", "gond-nrds --mode namespace");
  EXPECT_EQ(run("convert \"" + plain + "\" --to flat").code, 1);
}

TEST(CliTest, UnwritableOutputExits73) {
  std::string path = fixture_file("gond_73.provn", "gond-nrds");
  RunResult r = run("convert \"" + path + "\" --to json -o \"" +
                    (scratch() / "no_dir" / "x.json").string() + "\"");
  EXPECT_EQ(r.code, 73);
}

TEST(CliTest, CheckMatrix) {
  RunResult r = run("check --matrix");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, support_matrix_text());
  RunResult j = run("check --matrix --format json");
  EXPECT_EQ(nlohmann::json::parse(j.out)["requirements"].size(), 8u);
}

TEST(CliTest, CheckClinicalLeavesR4Unused) {
  std::string path = fixture_file("clinical_check.json", "clinical-trial --format json");
  RunResult r = run("check \"" + path + "\" --format json");
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& row : j["requirements"]) {
    if (row["requirement"] == "R4") {
      found = true;
      EXPECT_EQ(row["exercised"], false);
    } else {
      EXPECT_EQ(row["exercised"], true) << row;
    }
  }
  EXPECT_TRUE(found) << r.out;
}

TEST(CliTest, CheckForcedBundleIsInadequate) {
  std::string path = fixture_file("gond_check.provn", "gond-nrds");
  std::string text = slurp(path);
  std::size_t at = text.find("@mode bundles+");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 14, "@mode bundle");
  fs::path forced = scratch() / "gond_forced.provn";
  write_file(forced, text);
  // Strict parsing refuses nesting under a plain bundle header.
  EXPECT_EQ(run("validate \"" + forced.string() + "\"").code, 2);
  RunResult lenient = run("validate \"" + path + "\" --mode bundle");
  EXPECT_EQ(lenient.code, 1);
  EXPECT_NE(lenient.out.find("Impossibility"), std::string::npos);
}

TEST(CliTest, QueryChainsAndControllers) {
  std::string path = fixture_file("gond_query.provn", "gond-nrds");
  RunResult back = run("query \"" + path + "\" --backward open:publication_lab1");
  ASSERT_EQ(back.code, 0) << back.err;
  auto j = nlohmann::json::parse(back.out);
  bool origin = false;
  for (const auto& n : j["reached"]) origin |= n["id"] == "gond:entity_001";
  EXPECT_TRUE(origin);

  RunResult ctl = run("query \"" + path + "\" --controllers lab1:results");
  ASSERT_EQ(ctl.code, 0) << ctl.err;
  auto c = nlohmann::json::parse(ctl.out);
  EXPECT_EQ(c["environment"], "genv:lab1");
  EXPECT_EQ(c["controllers"].size(), 2u);

  EXPECT_EQ(run("query \"" + path + "\" --forward gond:missing").code, 1);
}

TEST(CliTest, EncodingsAgreeThroughFiles) {
  std::string b = fixture_file("eq_b.provn", "gond-nrds --mode bundles+");
  std::string n = fixture_file("eq_n.json", "gond-nrds --mode namespaces+ --format json");
  ProvDocument db = parse_document(slurp(b));
  ProvDocument dn = parse_json(slurp(n));
  EXPECT_TRUE(equivalent_content(db, dn));
  EXPECT_EQ(environment_graph(db), environment_graph(dn));
}

TEST(CliTest, PlainFixtureWarns) {
  RunResult r = run("fixture gond-nrds --mode bundle");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("R2"), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("@mode bundle"), std::string::npos);
}

}  // namespace
}  // namespace deprov::testing
