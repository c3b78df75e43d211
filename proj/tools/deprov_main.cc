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

// deprov: validate, convert, query and check data-environment provenance
// documents.
//
// Exit codes:
//   0   success / document valid
//   1   document invalid, requirement gaps, or a failed query
//   2   input could not be parsed
//   64  usage error
//   66  input file missing or unreadable
//   73  output file could not be written

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "deprov/dot.h"
#include "deprov/environment.h"
#include "deprov/fixtures.h"
#include "deprov/flatten.h"
#include "deprov/json_io.h"
#include "deprov/provn.h"
#include "deprov/reasoning.h"
#include "deprov/validation.h"

namespace {

using namespace deprov;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitCantCreate = 73;

// Thrown to unwind to main with a specific exit code.
struct ExitRequest {
  int code;
};

bool use_color() {
  const char* setting = std::getenv("DE_PROV_COLOR");
  std::string value = setting == nullptr ? "auto" : setting;
  if (value == "always") return true;
  if (value == "never") return false;
  return isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
}

std::string paint(const std::string& text, const char* code) {
  static const bool enabled = use_color();
  if (!enabled) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

bool ends_with(const std::string& text, const std::string& suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "deprov: cannot read " << path << "\n";
    throw ExitRequest{kExitNoInput};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "deprov: cannot write " << path << "\n";
    throw ExitRequest{kExitCantCreate};
  }
}

std::optional<EncodingMode> mode_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto mode = parse_encoding_mode(text);
  if (!mode) {
    std::cerr << "deprov: unknown mode '" << text
              << "' (bundle, namespace, namespaces+, bundles+)\n";
    throw ExitRequest{kExitUsage};
  }
  return mode;
}

// JSON when the path ends in .json, extended PROV-N otherwise.
ProvDocument load(const std::string& path, const ParseOptions& options = {}) {
  std::string text = read_input(path);
  try {
    if (ends_with(path, ".json")) return parse_json(text, options);
    return parse_document(text, options);
  } catch (const SchemaError& e) {
    std::cerr << path << ": " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << path << ": " << to_string(e.code()) << ": " << e.what()
              << "\n";
  }
  throw ExitRequest{kExitParse};
}

std::string human_report(const ValidationReport& report) {
  std::ostringstream out;
  if (report.findings.empty()) {
    out << paint("valid", "32") << ": no findings\n";
    return out.str();
  }
  out << (report.valid() ? paint("valid", "32") : paint("invalid", "31"))
      << ": " << report.findings.size() << " finding"
      << (report.findings.size() == 1 ? "" : "s") << "\n";
  for (const Finding& f : report.findings) {
    out << "  "
        << paint(std::string(to_string(f.severity)),
                 f.severity == Severity::kError ? "31" : "33")
        << " [" << paint(std::string(to_string(f.category)), "1") << "] "
        << f.message << "\n";
  }
  return out.str();
}

struct ValidateArgs {
  std::string input;
  std::string mode;
  std::string format = "human";
};

int run_validate(const ValidateArgs& args) {
  ParseOptions options;
  if (auto mode = mode_option(args.mode)) {
    options.enforce_mode = false;
    options.mode_override = mode;
  }
  ProvDocument doc = load(args.input, options);
  ValidationReport report = validate(doc);
  std::cout << (args.format == "json" ? report_to_json(report)
                                      : human_report(report));
  return report.valid() ? kExitOk : kExitFailure;
}

struct ConvertArgs {
  std::string input;
  std::string to;
  std::string out;
  bool show_attributes = false;
  std::size_t depth = 0;
  std::string direction = "LR";
};

int run_convert(const ConvertArgs& args) {
  ProvDocument doc = load(args.input);
  std::string text;
  if (args.to == "provn") {
    text = serialize_provn(doc);
  } else if (args.to == "json") {
    text = serialize_json(doc);
  } else if (args.to == "dot") {
    RenderOptions options;
    options.show_attributes = args.show_attributes;
    options.depth_limit = args.depth;
    options.direction = args.direction == "TB" ? RankDirection::kTopBottom
                                               : RankDirection::kLeftRight;
    text = to_dot(doc, options);
  } else {
    try {
      text = export_flattened(doc);
    } catch (const Error& e) {
      std::cerr << "deprov: " << e.what() << "\n";
      return kExitFailure;
    }
  }
  write_output(text, args.out);
  return kExitOk;
}

struct QueryArgs {
  std::string input;
  std::string forward;
  std::string backward;
  std::string controllers;
};

QualifiedName name_argument(const std::string& text) {
  auto name = QualifiedName::try_parse(text);
  if (!name) {
    std::cerr << "deprov: '" << text << "' is not a qualified name\n";
    throw ExitRequest{kExitUsage};
  }
  return *name;
}

int run_query(const QueryArgs& args) {
  if (args.forward.empty() && args.backward.empty() &&
      args.controllers.empty()) {
    std::cerr << "deprov query: one of --forward, --backward or "
                 "--controllers is required\n";
    return kExitUsage;
  }
  ProvDocument doc = load(args.input);
  try {
    if (!args.forward.empty()) {
      std::cout << chain_to_json(forward_chain(doc, name_argument(args.forward)));
    } else if (!args.backward.empty()) {
      std::cout << chain_to_json(
          backward_chain(doc, name_argument(args.backward)));
    } else {
      // An element id stands for the environment that holds it.
      QualifiedName target = name_argument(args.controllers);
      if (doc.environment(target) == nullptr) {
        if (auto home = doc.environment_of(target)) target = *home;
      }
      std::cout << controllers_to_json(target, controllers_of(doc, target));
    }
  } catch (const Error& e) {
    std::cerr << "deprov: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

struct CheckArgs {
  std::string input;
  bool matrix = false;
  std::string format = "human";
};

int run_check(const CheckArgs& args) {
  if (args.matrix) {
    std::cout << (args.format == "json" ? support_matrix_json()
                                        : support_matrix_text());
    if (args.input.empty()) return kExitOk;
  }
  if (args.input.empty()) {
    std::cerr << "deprov check: an input file or --matrix is required\n";
    return kExitUsage;
  }
  Assessment assessment = assess_document(load(args.input));
  std::cout << (args.format == "json" ? assessment_to_json(assessment)
                                      : assessment_to_text(assessment));
  return assessment.adequate() ? kExitOk : kExitFailure;
}

struct FixtureArgs {
  std::string id;
  std::string mode = "bundles+";
  std::string format = "provn";
  std::string out;
};

int run_fixture(const FixtureArgs& args) {
  auto id = parse_fixture_id(args.id);
  if (!id) {
    std::cerr << "deprov: unknown fixture '" << args.id
              << "' (gond-nrds, clinical-trial)\n";
    return kExitUsage;
  }
  FixtureBuild build = build_fixture(*id, *mode_option(args.mode));
  for (const auto& warning : build.warnings) {
    std::cerr << paint("warning", "33") << ": " << warning << "\n";
  }
  write_output(args.format == "json" ? serialize_json(build.document)
                                     : serialize_provn(build.document),
               args.out);
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Data-environment provenance toolkit"};
  app.name("deprov");
  app.require_subcommand(1);
  const std::vector<std::string> kModes = {"bundle", "namespace",
                                           "namespaces+", "bundles+"};

  ValidateArgs validate_args;
  auto* validate_cmd =
      app.add_subcommand("validate", "Validate a document against the "
                                     "provenance constraints");
  validate_cmd->add_option("input", validate_args.input, "Document file")
      ->required();
  validate_cmd
      ->add_option("--mode", validate_args.mode,
                   "Treat the document as this encoding mode")
      ->check(CLI::IsMember(kModes));
  validate_cmd->add_option("--format", validate_args.format, "Report format")
      ->check(CLI::IsMember({"human", "json"}));

  ConvertArgs convert_args;
  auto* convert_cmd =
      app.add_subcommand("convert", "Convert between notations");
  convert_cmd->add_option("input", convert_args.input, "Document file")
      ->required();
  convert_cmd->add_option("--to", convert_args.to, "Target notation")
      ->required()
      ->check(CLI::IsMember({"provn", "json", "dot", "flat"}));
  convert_cmd->add_option("--out,-o", convert_args.out, "Output file");
  convert_cmd->add_flag("--show-attributes", convert_args.show_attributes,
                        "DOT: list attributes in node labels");
  convert_cmd->add_option("--depth", convert_args.depth,
                          "DOT: deepest environment level drawn (0 = all)");
  convert_cmd->add_option("--direction", convert_args.direction,
                          "DOT: rank direction")
      ->check(CLI::IsMember({"LR", "TB"}));

  QueryArgs query_args;
  auto* query_cmd =
      app.add_subcommand("query", "Chain provenance or list controllers");
  query_cmd->add_option("input", query_args.input, "Document file")
      ->required();
  auto* forward = query_cmd->add_option("--forward", query_args.forward,
                                        "Everything downstream of an id");
  auto* backward = query_cmd->add_option("--backward", query_args.backward,
                                         "Everything upstream of an id");
  auto* controllers =
      query_cmd->add_option("--controllers", query_args.controllers,
                            "Control records over an environment");
  forward->excludes(backward)->excludes(controllers);
  backward->excludes(controllers);

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand(
      "check", "Assess requirement coverage of the document's encoding");
  check_cmd->add_option("input", check_args.input, "Document file");
  check_cmd->add_flag("--matrix", check_args.matrix,
                      "Print the requirement/encoding support matrix");
  check_cmd->add_option("--format", check_args.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));

  FixtureArgs fixture_args;
  auto* fixture_cmd =
      app.add_subcommand("fixture", "Emit a reference fixture document");
  fixture_cmd->add_option("id", fixture_args.id, "gond-nrds or clinical-trial")
      ->required();
  fixture_cmd->add_option("--mode", fixture_args.mode, "Encoding mode")
      ->check(CLI::IsMember(kModes));
  fixture_cmd->add_option("--format", fixture_args.format, "Output notation")
      ->check(CLI::IsMember({"provn", "json"}));
  fixture_cmd->add_option("--out,-o", fixture_args.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return run_validate(validate_args);
    if (*convert_cmd) return run_convert(convert_args);
    if (*query_cmd) return run_query(query_args);
    if (*check_cmd) return run_check(check_args);
    if (*fixture_cmd) return run_fixture(fixture_args);
  } catch (const ExitRequest& request) {
    return request.code;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
