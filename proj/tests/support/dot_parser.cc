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

#include "dot_parser.h"

#include <algorithm>
#include <cctype>

namespace deprov::testing {

namespace {

enum class Tok { kId, kPunct, kEnd };

struct Token {
  Tok type = Tok::kEnd;
  std::string text;
  bool quoted = false;
  std::size_t offset = 0;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw DotSyntaxError(what + " at offset " + std::to_string(i));
  };
  while (i < in.size()) {
    unsigned char c = in[i];
    if (std::isspace(c)) {
      ++i;
    } else if (in.substr(i, 2) == "//" ||
               (c == '#' && (i == 0 || in[i - 1] == '\n'))) {
      while (i < in.size() && in[i] != '\n') ++i;
    } else if (in.substr(i, 2) == "/*") {
      std::size_t end = in.find("*/", i + 2);
      if (end == std::string_view::npos) fail("unterminated comment");
      i = end + 2;
    } else if (c == '"') {
      Token t{Tok::kId, "", true, i};
      ++i;
      while (true) {
        if (i >= in.size()) fail("unterminated string");
        if (in[i] == '\\' && i + 1 < in.size()) {
          // DOT only unescapes \" ; everything else stays verbatim.
          if (in[i + 1] == '"') {
            t.text += '"';
          } else {
            t.text += in[i];
            t.text += in[i + 1];
          }
          i += 2;
        } else if (in[i] == '"') {
          ++i;
          break;
        } else {
          t.text += in[i++];
        }
      }
      out.push_back(std::move(t));
    } else if (std::isalpha(c) || c == '_' || c >= 0x80) {
      std::size_t start = i;
      while (i < in.size() &&
             (std::isalnum(static_cast<unsigned char>(in[i])) ||
              in[i] == '_' || static_cast<unsigned char>(in[i]) >= 0x80)) {
        ++i;
      }
      out.push_back({Tok::kId, std::string(in.substr(start, i - start)),
                     false, start});
    } else if (std::isdigit(c) || c == '.' ||
               (c == '-' && i + 1 < in.size() &&
                (std::isdigit(static_cast<unsigned char>(in[i + 1])) ||
                 in[i + 1] == '.'))) {
      std::size_t start = i;
      if (c == '-') ++i;
      bool dot = false;
      while (i < in.size() &&
             (std::isdigit(static_cast<unsigned char>(in[i])) ||
              (in[i] == '.' && !dot))) {
        if (in[i] == '.') dot = true;
        ++i;
      }
      out.push_back({Tok::kId, std::string(in.substr(start, i - start)),
                     false, start});
    } else if (in.substr(i, 2) == "->" || in.substr(i, 2) == "--") {
      out.push_back({Tok::kPunct, std::string(in.substr(i, 2)), false, i});
      i += 2;
    } else if (std::string_view("{}[];,=:").find(c) !=
               std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), false, i});
      ++i;
    } else {
      fail(std::string("unexpected character '") + static_cast<char>(c) +
           "'");
    }
  }
  out.push_back({Tok::kEnd, "", false, in.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  DotDocument parse() {
    DotDocument doc;
    if (keyword("strict")) {
      doc.strict = true;
      ++pos_;
    }
    if (keyword("digraph")) {
      doc.directed = true;
    } else if (!keyword("graph")) {
      fail("expected 'graph' or 'digraph'");
    }
    ++pos_;
    if (peek().type == Tok::kId) doc.root.name = next().text;
    edge_op_ = doc.directed ? "->" : "--";
    expect("{");
    statements(doc.root);
    expect("}");
    if (peek().type != Tok::kEnd) fail("trailing input");
    return doc;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_++]; }
  bool punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).type == Tok::kPunct && peek(ahead).text == p;
  }
  bool keyword(std::string_view k) const {
    return peek().type == Tok::kId && !peek().quoted &&
           lower(peek().text) == k;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DotSyntaxError(what + " at offset " + std::to_string(peek().offset) +
                         " (found '" + peek().text + "')");
  }
  void expect(std::string_view p) {
    if (!punct(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }
  std::string id() {
    if (peek().type != Tok::kId) fail("expected identifier");
    return next().text;
  }

  void statements(DotGraph& g) {
    while (!punct("}") && peek().type != Tok::kEnd) {
      statement(g);
      if (punct(";")) ++pos_;
    }
  }

  void attr_list(DotAttributes& out) {
    if (!punct("[")) fail("expected '['");
    while (punct("[")) {
      ++pos_;
      while (!punct("]")) {
        std::string key = id();
        expect("=");
        out[key] = id();
        if (punct(",") || punct(";")) ++pos_;
      }
      ++pos_;
    }
  }

  // A node id or a subgraph; returns the node names it stands for.
  std::vector<std::string> endpoint(DotGraph& g) {
    if (keyword("subgraph") || punct("{")) {
      DotGraph& sub = subgraph(g);
      return sub.all_nodes();
    }
    std::string name = id();
    if (punct(":")) fail("ports are not supported");
    return {name};
  }

  DotGraph& subgraph(DotGraph& g) {
    auto sub = std::make_unique<DotGraph>();
    if (keyword("subgraph")) {
      ++pos_;
      if (peek().type == Tok::kId) sub->name = next().text;
    }
    expect("{");
    statements(*sub);
    expect("}");
    g.subgraphs.push_back(std::move(sub));
    return *g.subgraphs.back();
  }

  void statement(DotGraph& g) {
    if (keyword("graph") || keyword("node") || keyword("edge")) {
      std::string which = lower(next().text);
      DotAttributes attrs;
      attr_list(attrs);
      if (which == "graph") {
        for (auto& [k, v] : attrs) g.attributes[k] = v;
      }
      return;
    }
    if (peek().type == Tok::kId && punct("=", 1)) {
      std::string key = next().text;
      ++pos_;
      g.attributes[key] = id();
      return;
    }
    bool is_subgraph = keyword("subgraph") || punct("{");
    std::vector<std::string> left = endpoint(g);
    if (punct("->") || punct("--")) {
      std::vector<std::pair<std::string, std::string>> pairs;
      while (punct("->") || punct("--")) {
        if (peek().text != edge_op_) fail("wrong edge operator");
        ++pos_;
        std::vector<std::string> right = endpoint(g);
        for (const auto& a : left) {
          for (const auto& b : right) pairs.emplace_back(a, b);
        }
        left = std::move(right);
      }
      DotAttributes attrs;
      if (punct("[")) attr_list(attrs);
      for (auto& [a, b] : pairs) g.edges.push_back({a, b, attrs});
      return;
    }
    if (is_subgraph) return;
    DotAttributes attrs;
    if (punct("[")) attr_list(attrs);
    auto& slot = g.nodes[left.front()];
    for (auto& [k, v] : attrs) slot[k] = v;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string edge_op_;
};

}  // namespace

std::vector<const DotGraph*> DotGraph::clusters() const {
  std::vector<const DotGraph*> out;
  for (const auto& sub : subgraphs) {
    if (sub->is_cluster()) {
      out.push_back(sub.get());
    } else {
      auto inner = sub->clusters();
      out.insert(out.end(), inner.begin(), inner.end());
    }
  }
  return out;
}

std::vector<std::string> DotGraph::all_nodes() const {
  std::vector<std::string> out;
  for (const auto& [name, attrs] : nodes) out.push_back(name);
  for (const auto& sub : subgraphs) {
    auto inner = sub->all_nodes();
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

std::vector<DotEdge> DotGraph::all_edges() const {
  std::vector<DotEdge> out = edges;
  for (const auto& sub : subgraphs) {
    auto inner = sub->all_edges();
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

const DotGraph* DotGraph::find(std::string_view subgraph_name) const {
  for (const auto& sub : subgraphs) {
    if (sub->name == subgraph_name) return sub.get();
    if (const DotGraph* hit = sub->find(subgraph_name)) return hit;
  }
  return nullptr;
}

std::size_t DotGraph::cluster_depth() const {
  std::size_t best = 0;
  for (const DotGraph* c : clusters()) {
    best = std::max(best, 1 + c->cluster_depth());
  }
  return best;
}

DotDocument parse_dot(std::string_view text) {
  return Parser(tokenize(text)).parse();
}

}  // namespace deprov::testing
