#include "elmatch/parser.hpp"

#include <cctype>
#include <optional>
#include <unordered_set>
#include <utility>

namespace elmatch {
namespace {

enum class TokenKind { Ident, LParen, RParen, LBrace, RBrace, Comma, Equals, Arrow, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 0;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

void report(std::vector<Diagnostic>& diagnostics, Severity severity, std::size_t line,
            std::size_t column, std::string code, std::string message) {
  diagnostics.push_back(
      {severity, line, column, std::move(code), std::move(message)});
}

// Splits one physical line into tokens. Returns false after reporting the
// first bad character.
bool tokenize_line(const std::string& text, int line_number,
                   std::vector<Token>& tokens, std::vector<Diagnostic>& diagnostics) {
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const int column = static_cast<int>(i) + 1;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      tokens.push_back({TokenKind::Ident, text.substr(i, j - i), line_number, column});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tokens.push_back({TokenKind::Arrow, "->", line_number, column});
      i += 2;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '(':
        kind = TokenKind::LParen;
        break;
      case ')':
        kind = TokenKind::RParen;
        break;
      case '{':
        kind = TokenKind::LBrace;
        break;
      case '}':
        kind = TokenKind::RBrace;
        break;
      case ',':
        kind = TokenKind::Comma;
        break;
      case '=':
        kind = TokenKind::Equals;
        break;
      default:
        report(diagnostics, Severity::Error, line_number, column, "syntax",
               std::string("unexpected character '") + c + "'");
        return false;
    }
    tokens.push_back({kind, std::string(1, c), line_number, column});
    ++i;
  }
  return true;
}

// Statement lines of the document, comments and blanks dropped. Lines that
// fail to tokenize are reported and skipped.
std::vector<Line> split_lines(const std::string& text,
                              std::vector<Diagnostic>& diagnostics) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++number;
    const std::string raw = text.substr(start, end - start);
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first != std::string::npos && raw[first] != '#') {
      Line line;
      line.number = number;
      if (tokenize_line(raw, number, line.tokens, diagnostics) && !line.tokens.empty()) {
        lines.push_back(std::move(line));
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

const std::unordered_set<std::string>& reserved_words() {
  static const std::unordered_set<std::string> words = {"and", "some", "Top", "Bottom"};
  return words;
}

// Token cursor over one statement line.
class Cursor {
 public:
  Cursor(const Line& line, std::vector<Diagnostic>& diagnostics)
      : line_(line), diagnostics_(diagnostics) {}

  const Token& peek() const {
    static const Token end_token;
    if (pos_ < line_.tokens.size()) return line_.tokens[pos_];
    return end_token;
  }

  bool at_end() const { return pos_ >= line_.tokens.size(); }

  Token take() {
    Token t = peek();
    if (!at_end()) ++pos_;
    return t;
  }

  // End-of-line positions point one past the final token.
  int error_column() const {
    if (!at_end()) return peek().column;
    if (line_.tokens.empty()) return 1;
    const Token& last = line_.tokens.back();
    return last.column + static_cast<int>(last.text.size());
  }

  void fail(const std::string& message) {
    report(diagnostics_, Severity::Error, line_.number, error_column(), "syntax", message);
  }

  // Identifier with any text, reserved words included.
  std::optional<std::string> expect_ident(const std::string& what) {
    if (peek().kind != TokenKind::Ident) {
      fail("expected " + what);
      return std::nullopt;
    }
    return take().text;
  }

  // Identifier usable as a symbol name.
  std::optional<std::string> expect_name(const std::string& what) {
    if (peek().kind != TokenKind::Ident) {
      fail("expected " + what);
      return std::nullopt;
    }
    if (reserved_words().count(peek().text) != 0) {
      fail("reserved word '" + peek().text + "' cannot name a " + what);
      return std::nullopt;
    }
    return take().text;
  }

  bool expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) {
      fail("expected " + what);
      return false;
    }
    take();
    return true;
  }

  bool expect_end() {
    if (at_end()) return true;
    fail("unexpected trailing input");
    return false;
  }

 private:
  const Line& line_;
  std::vector<Diagnostic>& diagnostics_;
  std::size_t pos_ = 0;
};

// CEXPR = 'Top' | 'Bottom' | NAME | '{' IND '}'
//       | 'and' '(' CEXPR (',' CEXPR)+ ')' | 'some' '(' ROLE ',' CEXPR ')'
ConceptRef parse_cexpr(Cursor& cursor) {
  const Token head = cursor.peek();
  if (head.kind == TokenKind::LBrace) {
    cursor.take();
    auto individual = cursor.expect_name("individual name");
    if (!individual) return nullptr;
    if (!cursor.expect(TokenKind::RBrace, "'}'")) return nullptr;
    return ConceptExpr::nominal(*individual);
  }
  if (head.kind != TokenKind::Ident) {
    cursor.fail("expected a concept expression");
    return nullptr;
  }
  cursor.take();
  if (head.text == "Top") return ConceptExpr::top();
  if (head.text == "Bottom") return ConceptExpr::bottom();
  if (head.text == "and") {
    if (!cursor.expect(TokenKind::LParen, "'(' after and")) return nullptr;
    std::vector<ConceptRef> members;
    ConceptRef first = parse_cexpr(cursor);
    if (!first) return nullptr;
    members.push_back(std::move(first));
    while (cursor.peek().kind == TokenKind::Comma) {
      cursor.take();
      ConceptRef next = parse_cexpr(cursor);
      if (!next) return nullptr;
      members.push_back(std::move(next));
    }
    if (members.size() < 2) {
      cursor.fail("and(...) needs at least two members");
      return nullptr;
    }
    if (!cursor.expect(TokenKind::RParen, "')' closing and")) return nullptr;
    return ConceptExpr::raw_conj(std::move(members));
  }
  if (head.text == "some") {
    if (!cursor.expect(TokenKind::LParen, "'(' after some")) return nullptr;
    auto role = cursor.expect_name("role name");
    if (!role) return nullptr;
    if (!cursor.expect(TokenKind::Comma, "',' after the role")) return nullptr;
    ConceptRef filler = parse_cexpr(cursor);
    if (!filler) return nullptr;
    if (!cursor.expect(TokenKind::RParen, "')' closing some")) return nullptr;
    return ConceptExpr::some(*role, std::move(filler));
  }
  return ConceptExpr::atom(head.text);
}

void check_kind(const SourceDocument& doc, DocumentKind expected) {
  if (doc.kind != expected) {
    throw Error(ErrorCode::InvalidArgument,
                "document " + doc.path + " opened under the wrong kind");
  }
}

// Undeclared-symbol scan used by party and CLI expressions, which must not
// extend the ontology's signature.
void check_symbols_declared(const ConceptRef& expr, const Ontology& ontology,
                            int line_number, std::vector<Diagnostic>& diagnostics) {
  switch (expr->kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Atom:
      if (!ontology.has_concept(expr->name())) {
        report(diagnostics, Severity::Error, line_number, 1, "unknown-symbol",
               "concept " + expr->name() + " is not declared by the ontology");
      }
      return;
    case ConceptKind::Nominal:
      if (!ontology.has_individual(expr->name())) {
        report(diagnostics, Severity::Error, line_number, 1, "unknown-symbol",
               "individual " + expr->name() + " is not declared by the ontology");
      }
      return;
    case ConceptKind::Some:
      if (!ontology.has_role(expr->role())) {
        report(diagnostics, Severity::Error, line_number, 1, "unknown-symbol",
               "role " + expr->role() + " is not declared by the ontology");
      }
      check_symbols_declared(expr->filler(), ontology, line_number, diagnostics);
      return;
    case ConceptKind::And:
      for (const auto& member : expr->members()) {
        check_symbols_declared(member, ontology, line_number, diagnostics);
      }
      return;
  }
}

std::string error_slug(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateComponent:
      return "duplicate-component";
    case ErrorCode::DuplicateOfferName:
      return "duplicate-offer-name";
    case ErrorCode::NonComponentConjunct:
      return "non-component-conjunct";
    case ErrorCode::ComponentRangeViolated:
      return "component-range";
    case ErrorCode::NominalUnsupported:
      return "nominal-unsupported";
    case ErrorCode::NotSimpleDescription:
      return "not-simple";
    case ErrorCode::PreconditionViolated:
      return "precondition";
    case ErrorCode::UnknownSymbol:
      return "unknown-symbol";
    case ErrorCode::InvalidArgument:
      return "invalid-argument";
  }
  return "error";
}

}  // namespace

Ontology parse_ontology(const SourceDocument& doc, std::vector<Diagnostic>& diagnostics) {
  check_kind(doc, DocumentKind::Ontology);
  Ontology ontology;
  for (const Line& line : split_lines(doc.text, diagnostics)) {
    Cursor cursor(line, diagnostics);
    auto keyword = cursor.expect_ident("a statement keyword");
    if (!keyword) continue;
    if (*keyword == "sub" || *keyword == "equiv") {
      ConceptRef lhs = parse_cexpr(cursor);
      if (!lhs) continue;
      ConceptRef rhs = parse_cexpr(cursor);
      if (!rhs) continue;
      if (!cursor.expect_end()) continue;
      ontology.add_gci(lhs, rhs);
      if (*keyword == "equiv") ontology.add_gci(rhs, lhs);
    } else if (*keyword == "rsub") {
      auto sub = cursor.expect_name("role name");
      if (!sub) continue;
      auto super = cursor.expect_name("role name");
      if (!super) continue;
      if (!cursor.expect_end()) continue;
      ontology.add_role_inclusion(RoleChain{{*sub}}, *super);
    } else if (*keyword == "rchain") {
      RoleChain chain;
      while (cursor.peek().kind == TokenKind::Ident) {
        auto role = cursor.expect_name("role name");
        if (!role) break;
        chain.roles.push_back(*role);
      }
      if (chain.roles.size() < 2) {
        cursor.fail("rchain needs at least two roles before '->'");
        continue;
      }
      if (!cursor.expect(TokenKind::Arrow, "'->'")) continue;
      auto super = cursor.expect_name("role name");
      if (!super) continue;
      if (!cursor.expect_end()) continue;
      ontology.add_role_inclusion(std::move(chain), *super);
    } else if (*keyword == "component") {
      auto role = cursor.expect_name("role name");
      if (!role) continue;
      auto top_concept = cursor.expect_name("concept name");
      if (!top_concept) continue;
      if (!cursor.expect_end()) continue;
      try {
        ontology.add_component(*role, *top_concept);
      } catch (const Error& e) {
        report(diagnostics, Severity::Error, line.number, 1, error_slug(e.code()),
               e.what());
      }
    } else if (*keyword == "instance") {
      ConceptRef expr = parse_cexpr(cursor);
      if (!expr) continue;
      auto individual = cursor.expect_name("individual name");
      if (!individual) continue;
      if (!cursor.expect_end()) continue;
      ontology.add_concept_assertion(expr, *individual);
      report(diagnostics, Severity::Warning, line.number, 1, "abox-ignored",
             "instance assertions are stored but ignored by reasoning");
    } else if (*keyword == "related") {
      auto role = cursor.expect_name("role name");
      if (!role) continue;
      auto subject = cursor.expect_name("individual name");
      if (!subject) continue;
      auto object = cursor.expect_name("individual name");
      if (!object) continue;
      if (!cursor.expect_end()) continue;
      ontology.add_role_assertion(*role, *subject, *object);
      report(diagnostics, Severity::Warning, line.number, 1, "abox-ignored",
             "related assertions are stored but ignored by reasoning");
    } else {
      report(diagnostics, Severity::Error, line.number, 1, "syntax",
             "unknown statement '" + *keyword + "'");
    }
  }
  return ontology;
}

std::vector<PartyRecord> parse_parties(const SourceDocument& doc, const Reasoner& reasoner,
                                       std::vector<Diagnostic>& diagnostics) {
  check_kind(doc, DocumentKind::Parties);
  std::vector<PartyRecord> records;
  std::unordered_set<std::string> names;
  for (const Line& line : split_lines(doc.text, diagnostics)) {
    Cursor cursor(line, diagnostics);
    auto keyword = cursor.expect_ident("'offer' or 'demand'");
    if (!keyword) continue;
    PartyKind kind;
    if (*keyword == "offer") {
      kind = PartyKind::Offer;
    } else if (*keyword == "demand") {
      kind = PartyKind::Demand;
    } else {
      report(diagnostics, Severity::Error, line.number, 1, "syntax",
             "expected 'offer' or 'demand', got '" + *keyword + "'");
      continue;
    }
    auto name = cursor.expect_name("party name");
    if (!name) continue;
    if (!cursor.expect(TokenKind::Equals, "'='")) continue;
    ConceptRef expr = parse_cexpr(cursor);
    if (!expr) continue;
    if (!cursor.expect_end()) continue;
    if (names.count(*name) != 0) {
      report(diagnostics, Severity::Error, line.number, 1, "duplicate-offer-name",
             "party name " + *name + " repeats");
      continue;
    }
    const std::size_t before = diagnostics.size();
    check_symbols_declared(expr, reasoner.ontology(), line.number, diagnostics);
    if (diagnostics.size() != before) continue;
    try {
      records.push_back(make_party(*name, kind, expr, reasoner));
      names.insert(*name);
    } catch (const Error& e) {
      report(diagnostics, Severity::Error, line.number, 1, error_slug(e.code()),
             e.what());
    }
  }
  return records;
}

WeightTable parse_weights(const SourceDocument& doc, const Ontology& ontology,
                          std::vector<Diagnostic>& diagnostics) {
  check_kind(doc, DocumentKind::Weights);
  WeightTable table;
  int number = 0;
  std::size_t start = 0;
  const std::string& text = doc.text;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++number;
    const std::string raw = text.substr(start, end - start);
    start = end + 1;
    std::size_t role_begin = raw.find_first_not_of(" \t\r");
    const bool last = end == text.size();
    if (role_begin == std::string::npos || raw[role_begin] == '#') {
      if (last) break;
      continue;
    }
    std::size_t role_end = raw.find_first_of(" \t", role_begin);
    std::size_t value_begin =
        role_end == std::string::npos ? std::string::npos
                                      : raw.find_first_not_of(" \t", role_end);
    std::size_t value_end = value_begin == std::string::npos
                                ? std::string::npos
                                : raw.find_first_of(" \t\r", value_begin);
    if (value_end == std::string::npos) value_end = raw.size();
    if (value_begin == std::string::npos ||
        raw.find_first_not_of(" \t\r", value_end) != std::string::npos) {
      report(diagnostics, Severity::Error, number, static_cast<int>(role_begin) + 1,
             "syntax", "expected 'ROLE WEIGHT'");
      if (last) break;
      continue;
    }
    const std::string role = raw.substr(role_begin, role_end - role_begin);
    const std::string literal = raw.substr(value_begin, value_end - value_begin);
    if (ontology.find_component(role) == nullptr) {
      report(diagnostics, Severity::Error, number, static_cast<int>(role_begin) + 1,
             "unknown-symbol", "role " + role + " is not a declared component role");
    } else if (table.entries().count(role) != 0) {
      report(diagnostics, Severity::Error, number, static_cast<int>(role_begin) + 1,
             "duplicate-weight", "weight for " + role + " repeats");
    } else {
      try {
        table.set(role, rational_from_decimal(literal));
      } catch (const Error& e) {
        report(diagnostics, Severity::Error, number, static_cast<int>(value_begin) + 1,
               "invalid-argument", e.what());
      }
    }
    if (last) break;
  }
  return table;
}

ConceptRef parse_concept(const std::string& text, std::vector<Diagnostic>& diagnostics) {
  const std::size_t before = diagnostics.size();
  std::vector<Line> lines = split_lines(text, diagnostics);
  if (diagnostics.size() != before) return nullptr;
  if (lines.size() != 1) {
    report(diagnostics, Severity::Error, 1, 1, "syntax",
           "expected exactly one concept expression");
    return nullptr;
  }
  Cursor cursor(lines.front(), diagnostics);
  ConceptRef expr = parse_cexpr(cursor);
  if (!expr) return nullptr;
  if (!cursor.expect_end()) return nullptr;
  return expr;
}

}  // namespace elmatch
