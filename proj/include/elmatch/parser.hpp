#pragma once

#include <string>
#include <vector>

#include "elmatch/concept.hpp"
#include "elmatch/diagnostics.hpp"
#include "elmatch/matchmaker.hpp"
#include "elmatch/ontology.hpp"
#include "elmatch/reasoner.hpp"

namespace elmatch {

enum class DocumentKind { Ontology, Parties, Weights };

struct SourceDocument {
  std::string path;  // used in diagnostics only
  std::string text;
  DocumentKind kind = DocumentKind::Ontology;
};

// Line-oriented statements, one per line; blank lines and lines whose first
// non-space character is '#' are skipped. Statements:
//   sub CEXPR CEXPR            subsumption axiom (first included in second)
//   equiv CEXPR CEXPR          both inclusion directions
//   rsub ROLE ROLE             role inclusion
//   rchain ROLE ROLE... -> ROLE  role composition inclusion
//   component ROLE NAME        component role with its top concept
//   instance CEXPR IND         membership assertion (stored, reasoning skips it)
//   related ROLE IND IND       role assertion (stored, reasoning skips it)
// Concept grammar:
//   CEXPR = 'Top' | 'Bottom' | NAME | '{' IND '}'
//         | 'and(' CEXPR (',' CEXPR)+ ')' | 'some(' ROLE ',' CEXPR ')'
// Identifiers match [A-Za-z][A-Za-z0-9_]*; and/some/Top/Bottom are reserved.
// Symbols enter the symbol tables on first use. Problems append to
// diagnostics; the returned ontology covers every line that parsed.
Ontology parse_ontology(const SourceDocument& doc, std::vector<Diagnostic>& diagnostics);

// Statements: ('offer' | 'demand') NAME '=' CEXPR. Every symbol must already
// be declared by the ontology, and each description must be a conjunction of
// existentials over component roles (see to_component_form). Names are
// unique across the whole file.
std::vector<PartyRecord> parse_parties(const SourceDocument& doc, const Reasoner& reasoner,
                                       std::vector<Diagnostic>& diagnostics);

// Statements: ROLE WEIGHT, one per line, where ROLE is a declared component
// role and WEIGHT a positive decimal. Roles may appear once each.
WeightTable parse_weights(const SourceDocument& doc, const Ontology& ontology,
                          std::vector<Diagnostic>& diagnostics);

// One CEXPR covering the whole string; nullptr when diagnostics gained an
// error. Used for command-line concept arguments.
ConceptRef parse_concept(const std::string& text, std::vector<Diagnostic>& diagnostics);

}  // namespace elmatch
