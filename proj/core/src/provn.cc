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

#include "deprov/provn.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "deprov/environment.h"
#include "json_common.h"

namespace deprov {

namespace {

std::string build_message(const SourceSpan& span, const std::string& expected,
                          const std::string& found,
                          const std::string& detail) {
  std::string out = std::to_string(span.begin.line) + ":" +
                    std::to_string(span.begin.column) + ": ";
  if (!expected.empty()) {
    out += "expected " + expected + ", found ";
    if (found.empty()) {
      out += "end of input";
    } else if (found == "\n") {
      out += "end of line";
    } else {
      out += "'" + found + "'";
    }
    if (!detail.empty()) out += " (" + detail + ")";
  } else {
    out += detail;
  }
  return out;
}

}  // namespace

ParseError::ParseError(ErrorCode code, SourceSpan span, std::string expected,
                       std::string found, const std::string& detail)
    : Error(code, build_message(span, expected, found, detail)),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

// Length of the UTF-8 sequence starting at `i`, or 0 when malformed.
std::size_t utf8_sequence(std::string_view s, std::size_t i) {
  auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(s[k]);
  };
  unsigned char c = byte(i);
  if (c < 0x80) return 1;
  std::size_t len;
  std::uint32_t cp;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    if ((byte(i + k) & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0;
  }
  return len;
}

enum class Tok {
  kEnd,
  kName,        // keyword or bare word
  kQName,       // prefix:local
  kQuotedName,  // 'prefix:local'
  kString,      // "..." (text holds the unescaped value)
  kInteger,
  kTime,        // xsd:dateTime lexical form
  kIri,         // <...> (text holds the content)
  kPunct,       // ( ) [ ] , ; = - %%
  kDirective,   // @word
};

struct Token {
  Tok type = Tok::kEnd;
  std::string text;
  SourceSpan span;
};

// Token as it appeared in the source; empty at end of input.
std::string describe(const Token& token) {
  switch (token.type) {
    case Tok::kEnd: return "";
    case Tok::kString: return "\"" + token.text + "\"";
    case Tok::kIri: return "<" + token.text + ">";
    case Tok::kQuotedName: return "'" + token.text + "'";
    default: return token.text;
  }
}

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '.' || c == '-';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  const Token& peek() {
    if (!peeked_) peeked_ = scan();
    return *peeked_;
  }

  Token next() {
    Token token = peek();
    peeked_.reset();
    return token;
  }

  // The bare word after a directive, e.g. "bundles+".
  Token directive_argument() {
    skip_trivia();
    Token token;
    token.span.begin = here();
    while (pos_ < src_.size() && (is_name_char(cur()) || cur() == '+')) {
      advance();
    }
    token.span.end = here();
    token.text = std::string(
        src_.substr(token.span.begin.offset, pos_ - token.span.begin.offset));
    token.type = token.text.empty() ? Tok::kEnd : Tok::kName;
    return token;
  }

  // A balanced JSON object starting at the next non-trivia character.
  Token json_block() {
    skip_trivia();
    Token token;
    token.type = Tok::kString;
    token.span.begin = here();
    if (pos_ >= src_.size() || cur() != '{') {
      token.span.end = here();
      throw ParseError(ErrorCode::kParseError, token.span, "'{'",
                       pos_ >= src_.size() ? "" : std::string(1, cur()));
    }
    int depth = 0;
    bool in_string = false;
    while (pos_ < src_.size()) {
      char c = cur();
      advance();
      if (in_string) {
        if (c == '\\' && pos_ < src_.size()) {
          advance();
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}') {
        if (--depth == 0) break;
      }
    }
    token.span.end = here();
    if (depth != 0) {
      throw ParseError(ErrorCode::kParseError, token.span, "'}'",
                       "", "unterminated sidecar block");
    }
    token.text = std::string(
        src_.substr(token.span.begin.offset, pos_ - token.span.begin.offset));
    return token;
  }

 private:
  char cur() const { return src_[pos_]; }
  char at(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  SourcePosition here() const { return {line_, column_, pos_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(SourcePosition begin, const std::string& expected,
                         const std::string& found,
                         const std::string& detail = "") {
    throw ParseError(ErrorCode::kParseError, {begin, here()}, expected, found,
                     detail);
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = cur();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && at(1) == '/') {
        while (pos_ < src_.size() && cur() != '\n') advance();
      } else if (c == '/' && at(1) == '*') {
        SourcePosition begin = here();
        advance();
        advance();
        while (pos_ < src_.size() && !(cur() == '*' && at(1) == '/')) {
          advance();
        }
        if (pos_ >= src_.size()) {
          fail(begin, "'*/'", "", "unterminated comment");
        }
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  Token scan() {
    skip_trivia();
    Token token;
    token.span.begin = here();
    if (pos_ >= src_.size()) {
      token.span.end = here();
      return token;
    }
    char c = cur();
    std::size_t start = pos_;
    auto finish = [&](Tok type) {
      token.type = type;
      token.span.end = here();
      if (token.text.empty()) {
        token.text = std::string(src_.substr(start, pos_ - start));
      }
      return token;
    };

    if (c == '%' && at(1) == '%') {
      advance();
      advance();
      return finish(Tok::kPunct);
    }
    if (std::string_view("()[],;=").find(c) != std::string_view::npos) {
      advance();
      return finish(Tok::kPunct);
    }
    if (c == '-' && !is_digit(at(1))) {
      advance();
      return finish(Tok::kPunct);
    }
    if (c == '"') {
      advance();
      std::string value;
      while (true) {
        if (pos_ >= src_.size()) {
          fail(token.span.begin, "closing '\"'", "",
               "unterminated string");
        }
        char d = cur();
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\\') {
          advance();
          if (pos_ >= src_.size()) continue;
          char e = cur();
          switch (e) {
            case 'n': value += '\n'; break;
            case 't': value += '\t'; break;
            case 'r': value += '\r'; break;
            case '"': value += '"'; break;
            case '\\': value += '\\'; break;
            default:
              fail(token.span.begin, "escape sequence",
                   std::string("'\\") + e + "'");
          }
          advance();
          continue;
        }
        value += d;
        advance();
      }
      token.text = value;
      token.type = Tok::kString;
      token.span.end = here();
      return token;
    }
    if (c == '\'') {
      advance();
      std::size_t inner = pos_;
      while (pos_ < src_.size() && cur() != '\'' && cur() != '\n') advance();
      if (pos_ >= src_.size() || cur() != '\'') {
        fail(token.span.begin, "closing \"'\"",
             pos_ >= src_.size() ? "" : "\n",
             "unterminated qualified name literal");
      }
      token.text = std::string(src_.substr(inner, pos_ - inner));
      advance();
      return finish(Tok::kQuotedName);
    }
    if (c == '<') {
      advance();
      std::size_t inner = pos_;
      while (pos_ < src_.size() && cur() != '>' && cur() != '\n') advance();
      if (pos_ >= src_.size() || cur() != '>') {
        fail(token.span.begin, "'>'", pos_ >= src_.size() ? "" : "\n",
             "unterminated IRI");
      }
      token.text = std::string(src_.substr(inner, pos_ - inner));
      advance();
      return finish(Tok::kIri);
    }
    if (c == '@') {
      advance();
      while (pos_ < src_.size() && is_name_char(cur())) advance();
      return finish(Tok::kDirective);
    }
    if (is_digit(c) || c == '-') {
      advance();
      std::size_t digits = 1;
      while (pos_ < src_.size() && is_digit(cur())) {
        advance();
        ++digits;
      }
      if (c != '-' && digits == 4 && pos_ < src_.size() && cur() == '-' &&
          is_digit(at(1))) {
        while (pos_ < src_.size() &&
               (is_digit(cur()) || std::string_view(":-+.TZ").find(cur()) !=
                                       std::string_view::npos)) {
          advance();
        }
        return finish(Tok::kTime);
      }
      return finish(Tok::kInteger);
    }
    if (is_name_start(c)) {
      while (pos_ < src_.size() && is_name_char(cur())) advance();
      if (pos_ < src_.size() && cur() == ':' && is_name_char(at(1))) {
        advance();
        while (pos_ < src_.size() && is_name_char(cur())) advance();
        return finish(Tok::kQName);
      }
      return finish(Tok::kName);
    }
    std::size_t len = utf8_sequence(src_, pos_);
    advance();
    for (std::size_t k = 1; k < len; ++k) ++pos_;
    token.span.end = here();
    throw ParseError(ErrorCode::kParseError, token.span, "a token",
                     std::string(src_.substr(start, pos_ - start)));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::optional<Token> peeked_;
};

// Standard statements this implementation does not model.
constexpr std::string_view kUnsupportedStatements[] = {
    "wasStartedBy",  "wasEndedBy",   "wasInvalidatedBy", "specializationOf",
    "alternateOf",   "hadMember",    "mentionOf",        "default",
    "wasRevisionOf", "wasQuotedFrom", "hadPrimarySource"};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : lex_(text), options_(options) {}

  ProvDocument run() {
    expect_word("document");
    EncodingMode mode = EncodingMode::kBundle;
    if (lex_.peek().type == Tok::kDirective && lex_.peek().text == "@mode") {
      lex_.next();
      Token arg = lex_.directive_argument();
      auto parsed = parse_encoding_mode(arg.text);
      if (!parsed) {
        fail(arg, "an encoding mode (bundle, namespace, namespaces+, bundles+)");
      }
      mode = *parsed;
    }
    doc_ = ProvDocument(mode);

    while (true) {
      const Token& token = lex_.peek();
      if (token.type == Tok::kName && token.text == "endDocument") {
        lex_.next();
        break;
      }
      if (token.type == Tok::kDirective && token.text == "@sidecar") {
        sidecar();
        Token end = lex_.next();
        if (end.type != Tok::kName || end.text != "endDocument") {
          fail(end, "'endDocument' after the sidecar block");
        }
        break;
      }
      statement(std::nullopt);
    }
    Token trailing = lex_.next();
    if (trailing.type != Tok::kEnd) fail(trailing, "end of input");

    if (options_.mode_override) doc_.force_mode(*options_.mode_override);
    doc_.derive_namespace_membership();
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const Token& token, const std::string& expected,
                         const std::string& detail = "") {
    throw ParseError(ErrorCode::kParseError, token.span, expected,
                     describe(token), detail);
  }

  [[noreturn]] void rethrow(const Token& token, const Error& error) {
    throw ParseError(error.code(), token.span, "", "", error.what());
  }

  template <typename Fn>
  void guarded(const Token& token, Fn&& fn) {
    try {
      fn();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      rethrow(token, e);
    }
  }

  bool at_punct(std::string_view p) {
    const Token& t = lex_.peek();
    return t.type == Tok::kPunct && t.text == p;
  }

  Token expect_punct(std::string_view p) {
    Token t = lex_.next();
    if (t.type != Tok::kPunct || t.text != p) {
      fail(t, "'" + std::string(p) + "'");
    }
    return t;
  }

  Token expect_word(std::string_view word) {
    Token t = lex_.next();
    if (t.type != Tok::kName || t.text != word) {
      fail(t, "'" + std::string(word) + "'");
    }
    return t;
  }

  QualifiedName to_qname(const Token& t) {
    auto name = QualifiedName::try_parse(t.text);
    if (!name) {
      throw ParseError(ErrorCode::kInvalidIdentifier, t.span,
                       "a qualified name", describe(t));
    }
    guarded(t, [&] { doc_.require_resolvable(*name); });
    return *name;
  }

  QualifiedName expect_qname(const char* what) {
    Token t = lex_.next();
    if (t.type != Tok::kQName) fail(t, what);
    return to_qname(t);
  }

  void statement(const std::optional<QualifiedName>& environment) {
    Token keyword = lex_.next();
    if (keyword.type != Tok::kName) fail(keyword, "a statement");
    const std::string& word = keyword.text;
    if (word == "prefix") {
      if (environment) fail(keyword, "a statement", "prefix inside bundle");
      prefix_declaration();
    } else if (word == "bundle") {
      bundle(keyword, environment);
    } else if (auto kind = parse_element_kind(word)) {
      element(*kind, environment);
    } else if (auto relation_kind = parse_relation_kind(word)) {
      relation(*relation_kind);
    } else if (std::find(std::begin(kUnsupportedStatements),
                         std::end(kUnsupportedStatements),
                         word) != std::end(kUnsupportedStatements)) {
      throw ParseError(ErrorCode::kParseError, keyword.span, "", word,
                       "unsupported construct '" + word + "'");
    } else {
      fail(keyword, "a statement");
    }
  }

  void prefix_declaration() {
    Token name = lex_.next();
    if (name.type != Tok::kName) fail(name, "a prefix name");
    Token iri = lex_.next();
    if (iri.type != Tok::kIri) fail(iri, "a namespace IRI in <...>");
    guarded(name, [&] { doc_.declare_namespace(name.text, iri.text); });
  }

  void bundle(const Token& keyword,
              const std::optional<QualifiedName>& parent) {
    if (is_namespace_mode(doc_.mode())) {
      throw ParseError(ErrorCode::kParseError, keyword.span, "", "bundle",
                       "bundle statements are not used in namespace "
                       "encodings; environments belong in the sidecar");
    }
    Token id_token = lex_.peek();
    QualifiedName id;
    Attributes attributes;
    if (at_punct("(")) {
      lex_.next();
      id_token = lex_.peek();
      id = expect_qname("a bundle identifier");
      if (at_punct(",")) {
        lex_.next();
        expect_punct("[");
        attributes = attribute_list();
      }
      expect_punct(")");
    } else {
      id = expect_qname("a bundle identifier");
    }

    bool enforce = options_.enforce_mode;
    guarded(id_token, [&] {
      if (enforce && parent) {
        require_support(doc_.mode(), Requirement::kR2NestedEnvironments);
      }
      if (enforce && !attributes.empty()) {
        require_support(doc_.mode(), Requirement::kR3EnvironmentAttributes);
      }
      if (DataEnvironment* existing = doc_.mutable_environment(id)) {
        if (enforce) {
          throw Error(ErrorCode::kDuplicateId,
                      "bundle " + id.str() + " declared twice");
        }
        merge_attributes(existing->attributes, attributes);
      } else {
        DataEnvironment env;
        env.id = id;
        env.attributes = std::move(attributes);
        env.parent = parent;
        doc_.insert_environment(std::move(env));
      }
    });

    while (true) {
      const Token& t = lex_.peek();
      if (t.type == Tok::kName && t.text == "endBundle") {
        lex_.next();
        return;
      }
      if (t.type == Tok::kEnd) fail(t, "'endBundle'");
      statement(id);
    }
  }

  void element(ElementKind kind,
               const std::optional<QualifiedName>& environment) {
    expect_punct("(");
    Token id_token = lex_.peek();
    Element el;
    el.kind = kind;
    el.id = expect_qname("an identifier");
    if (at_punct(",")) {
      lex_.next();
      if (kind == ElementKind::kActivity && !at_punct("[")) {
        el.start_time = optional_time();
        expect_punct(",");
        el.end_time = optional_time();
        if (at_punct(",")) {
          lex_.next();
          expect_punct("[");
          el.attributes = attribute_list();
        }
      } else {
        expect_punct("[");
        el.attributes = attribute_list();
      }
    }
    expect_punct(")");
    guarded(id_token, [&] { doc_.insert_element(std::move(el), environment); });
  }

  std::optional<std::string> optional_time() {
    Token t = lex_.next();
    if (t.type == Tok::kPunct && t.text == "-") return std::nullopt;
    if (t.type != Tok::kTime) fail(t, "a time or '-'");
    return t.text;
  }

  void relation(RelationKind kind) {
    expect_punct("(");
    Relation rel;
    rel.kind = kind;
    std::vector<Token> args;
    Token first = lex_.next();
    if (at_punct(";")) {
      lex_.next();
      if (first.type == Tok::kQName) {
        rel.id = to_qname(first);
      } else if (!(first.type == Tok::kPunct && first.text == "-")) {
        fail(first, "a relation identifier or '-'");
      }
      first = lex_.next();
    }
    args.push_back(first);
    while (at_punct(",")) {
      lex_.next();
      if (at_punct("[")) {
        lex_.next();
        rel.attributes = attribute_list();
        break;
      }
      args.push_back(lex_.next());
    }
    Token close = expect_punct(")");
    if (args.size() < 2) fail(close, "',' and a second argument");
    if (args[0].type != Tok::kQName) fail(args[0], "a subject identifier");
    if (args[1].type != Tok::kQName) fail(args[1], "an object identifier");
    rel.subject = to_qname(args[0]);
    rel.object = to_qname(args[1]);
    for (std::size_t i = 2; i < args.size(); ++i) {
      if (!(args[i].type == Tok::kPunct && args[i].text == "-")) {
        throw ParseError(ErrorCode::kParseError, args[i].span, "'-'",
                         describe(args[i]),
                         "unsupported construct: optional relation arguments");
      }
    }
    doc_.insert_relation(std::move(rel));
  }

  // Called after '['.
  Attributes attribute_list() {
    Attributes attributes;
    if (at_punct("]")) {
      lex_.next();
      return attributes;
    }
    while (true) {
      QualifiedName key = expect_qname("an attribute name");
      expect_punct("=");
      attributes[key] = attribute_value();
      Token t = lex_.next();
      if (t.type == Tok::kPunct && t.text == "]") break;
      if (t.type != Tok::kPunct || t.text != ",") fail(t, "',' or ']'");
    }
    return attributes;
  }

  AttributeValue attribute_value() {
    Token t = lex_.next();
    switch (t.type) {
      case Tok::kString:
        if (at_punct("%%")) {
          lex_.next();
          QualifiedName type = expect_qname("a datatype");
          if (type == prov_name("QUALIFIED_NAME")) {
            auto name = QualifiedName::try_parse(t.text);
            if (!name) fail(t, "a qualified name literal");
            guarded(t, [&] { doc_.require_resolvable(*name); });
            return AttributeValue(*name);
          }
          return AttributeValue(t.text, type);
        }
        return AttributeValue(t.text);
      case Tok::kInteger: {
        std::int64_t value = 0;
        auto [end, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(),
                            value);
        if (ec != std::errc() || end != t.text.data() + t.text.size()) {
          fail(t, "a 64-bit integer");
        }
        return AttributeValue(value);
      }
      case Tok::kQuotedName:
        return AttributeValue(to_qname(t));
      default:
        fail(t, "an attribute value");
    }
  }

  void sidecar() {
    Token directive = lex_.next();
    Token block = lex_.json_block();
    internal::json parsed;
    try {
      parsed = internal::json::parse(block.text);
    } catch (const internal::json::parse_error& e) {
      throw ParseError(ErrorCode::kParseError, block.span, "", "",
                       std::string("invalid sidecar JSON: ") + e.what());
    }
    try {
      internal::apply_sidecar(doc_, parsed, "", options_.enforce_mode);
    } catch (const SchemaError& e) {
      throw ParseError(e.code(), block.span, "", "",
                       std::string("sidecar ") + e.what());
    } catch (const Error& e) {
      rethrow(directive, e);
    }
  }

  Lexer lex_;
  ParseOptions options_;
  ProvDocument doc_;
};

std::string quote_name(const QualifiedName& name) {
  return "'" + name.str() + "'";
}

std::string format_value(const AttributeValue& value) {
  if (const auto* name = value.as_qualified_name()) return quote_name(*name);
  if (const auto* number = value.as_integer()) return std::to_string(*number);
  std::string out = "\"" + escape_provn_string(*value.as_string()) + "\"";
  if (value.datatype()) out += " %% " + value.datatype()->str();
  return out;
}

class Writer {
 public:
  explicit Writer(const ProvDocument& doc) : doc_(doc) {}

  std::string run() {
    out_ << "document\n";
    line(1) << "@mode " << to_string(doc_.mode()) << "\n";
    for (const auto& [prefix, uri] : doc_.namespaces().declared()) {
      line(1) << "prefix " << prefix << " <" << uri << ">\n";
    }
    std::vector<Relation> relations(doc_.relations().begin(),
                                    doc_.relations().end());
    std::sort(relations.begin(), relations.end());
    relation_written_.assign(relations.size(), false);
    relations_ = &relations;
    for (std::size_t i = 0; i < relations.size(); ++i) {
      if (auto home = doc_.environment_of(relations[i].subject)) {
        relations_by_home_[*home].push_back(i);
      }
    }

    if (is_bundle_mode(doc_.mode())) {
      for (const auto& root : root_environments(doc_)) bundle(root, 1);
    }
    std::vector<Element> elements(doc_.elements().begin(),
                                  doc_.elements().end());
    std::sort(elements.begin(), elements.end());
    for (const Element& el : elements) {
      if (is_bundle_mode(doc_.mode()) && placed_.count(el.id) != 0) continue;
      line(1) << format_provn_statement(el) << "\n";
    }
    for (std::size_t i = 0; i < relations.size(); ++i) {
      if (!relation_written_[i]) {
        line(1) << format_provn_statement(relations[i]) << "\n";
      }
    }
    internal::json sidecar = internal::sidecar_json(doc_);
    if (!sidecar.empty()) {
      std::string text = sidecar.dump(2);
      line(1) << "@sidecar ";
      for (char c : text) {
        out_ << c;
        if (c == '\n') out_ << "  ";
      }
      out_ << "\n";
    }
    out_ << "endDocument\n";
    return out_.str();
  }

 private:
  std::ostream& line(int depth) {
    for (int i = 0; i < depth; ++i) out_ << "  ";
    return out_;
  }

  void bundle(const QualifiedName& id, int depth) {
    if (!visited_.insert(id).second) return;
    const DataEnvironment& env = *doc_.environment(id);
    if (env.attributes.empty()) {
      line(depth) << "bundle " << id.str() << "\n";
    } else {
      line(depth) << "bundle (" << id.str() << ", "
                  << format_provn_attributes(env.attributes) << ")\n";
    }
    std::vector<Element> members;
    for (const auto& member : env.members) {
      for (const Element* el : doc_.lookup_all(member)) members.push_back(*el);
      placed_.insert(member);
    }
    std::sort(members.begin(), members.end());
    for (const Element& el : members) {
      line(depth + 1) << format_provn_statement(el) << "\n";
    }
    for (std::size_t i : relations_by_home_[id]) {
      line(depth + 1) << format_provn_statement((*relations_)[i]) << "\n";
      relation_written_[i] = true;
    }
    for (const auto& child : children_of(doc_, id)) bundle(child, depth + 1);
    line(depth) << "endBundle\n";
  }

  const ProvDocument& doc_;
  std::ostringstream out_;
  std::set<QualifiedName> placed_;
  std::set<QualifiedName> visited_;
  std::vector<bool> relation_written_;
  const std::vector<Relation>* relations_ = nullptr;
  // Indexes into *relations_ keyed by the environment holding the subject.
  std::map<QualifiedName, std::vector<std::size_t>> relations_by_home_;
};

}  // namespace

ProvDocument parse_document(std::string_view text,
                            const ParseOptions& options) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
    throw ParseError(ErrorCode::kParseError, SourceSpan{{1, 1, 0}, {1, 1, 3}},
                     "", "\xEF\xBB\xBF",
                     "byte order mark (BOM) is not allowed");
  }
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len = utf8_sequence(text, i);
    if (len == 0) {
      SourcePosition at{line, column, i};
      throw ParseError(ErrorCode::kParseError, {at, {line, column + 1, i + 1}},
                       "", "", "invalid UTF-8 byte sequence");
    }
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      column += len;
    }
    i += len;
  }
  return Parser(text, options).run();
}

std::string escape_provn_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string format_provn_attributes(const Attributes& attributes) {
  std::string out = "[";
  bool first = true;
  for (const auto& [key, value] : attributes) {
    if (!first) out += ", ";
    first = false;
    out += key.str() + "=" + format_value(value);
  }
  out += "]";
  return out;
}

std::string format_provn_statement(const Element& element) {
  std::string out = std::string(to_string(element.kind)) + "(" +
                    element.id.str();
  if (element.kind == ElementKind::kActivity &&
      (element.start_time || element.end_time)) {
    out += ", " + element.start_time.value_or("-");
    out += ", " + element.end_time.value_or("-");
  }
  if (!element.attributes.empty()) {
    out += ", " + format_provn_attributes(element.attributes);
  }
  out += ")";
  return out;
}

std::string format_provn_statement(const Relation& relation) {
  std::string out = std::string(to_string(relation.kind)) + "(";
  if (relation.id) out += relation.id->str() + "; ";
  out += relation.subject.str() + ", " + relation.object.str();
  if (!relation.attributes.empty()) {
    out += ", " + format_provn_attributes(relation.attributes);
  }
  out += ")";
  return out;
}

std::string serialize_provn(const ProvDocument& doc) {
  return Writer(doc).run();
}

}  // namespace deprov
