#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "elmatch/matchmaker.hpp"
#include "elmatch/ontology.hpp"
#include "elmatch/parser.hpp"
#include "elmatch/reasoner.hpp"

namespace elmatch::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline std::string read_file_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Parses a fixture or inline document and fails the test hard on any error
// diagnostic; warnings are tolerated.
inline Ontology parse_ontology_or_throw(const std::string& text,
                                        const std::string& label = "<inline>") {
  std::vector<Diagnostic> diagnostics;
  SourceDocument doc{label, text, DocumentKind::Ontology};
  Ontology ontology = parse_ontology(doc, diagnostics);
  if (has_errors(diagnostics)) {
    throw std::runtime_error("ontology " + label + " failed to parse: " +
                             format_diagnostic(diagnostics.front(), label));
  }
  return ontology;
}

inline Ontology metrology_ontology() {
  return parse_ontology_or_throw(read_file_or_throw(fixture_path("metrology.ont")),
                                 "metrology.ont");
}

inline std::vector<PartyRecord> metrology_parties(const Reasoner& reasoner) {
  std::vector<Diagnostic> diagnostics;
  SourceDocument doc{"metrology_parties.pty",
                     read_file_or_throw(fixture_path("metrology_parties.pty")),
                     DocumentKind::Parties};
  std::vector<PartyRecord> records = parse_parties(doc, reasoner, diagnostics);
  if (has_errors(diagnostics)) {
    throw std::runtime_error("parties fixture failed to parse: " +
                             format_diagnostic(diagnostics.front(), doc.path));
  }
  return records;
}

// Concept expression shorthand for test bodies.
inline ConceptRef atom(const std::string& name) { return ConceptExpr::atom(name); }
inline ConceptRef some(const std::string& role, const ConceptRef& filler) {
  return ConceptExpr::some(role, filler);
}
inline ConceptRef conj(std::vector<ConceptRef> members) {
  return ConceptExpr::conj(std::move(members));
}

inline ConceptRef parse_concept_or_throw(const std::string& text) {
  std::vector<Diagnostic> diagnostics;
  ConceptRef expr = parse_concept(text, diagnostics);
  if (!expr) {
    throw std::runtime_error("concept '" + text + "' failed to parse: " +
                             format_diagnostic(diagnostics.front(), "<inline>"));
  }
  return expr;
}

}  // namespace elmatch::testing
