#pragma once

#include "elmatch/concept.hpp"
#include "elmatch/ontology.hpp"
#include "elmatch/reasoner.hpp"

namespace elmatch {

// The inference operations below work on simple descriptions: Top, atoms,
// existentials, and conjunctions of those. Bottom and nominals are rejected
// (Error{NotSimpleDescription} / Error{NominalUnsupported}).
bool is_simple_description(const ConceptRef& expr);
void ensure_simple(const ConceptRef& expr);

// Drops every top-level conjunct strictly entailed by another kept conjunct,
// keeping the lexicographically smallest rendering among equivalent ones,
// and recurses into existential fillers first. The result is equivalent to
// the input and canonical; reducing again changes nothing.
ConceptRef reduce(const ConceptRef& expr, const Reasoner& reasoner);

// Structural least common subsumer: the named concepts entailed above both
// inputs, conjoined with one recursive existential per same-role conjunct
// pair, then reduced. Always a common subsumer of both inputs; least within
// the structural fragment the inputs span.
ConceptRef lcs(const ConceptRef& c, const ConceptRef& d, const Reasoner& reasoner);

// Conjuncts of c not already entailed by d; Top when d covers everything.
// Requires c \sqsubseteq d (Error{PreconditionViolated} otherwise). The
// defining identity difference(c, d) \sqcap d == c is asserted at runtime.
ConceptRef semantic_difference(const ConceptRef& c, const ConceptRef& d, const Reasoner& reasoner);

// What the demand projection asks for beyond what demand and offer share.
ConceptRef rest(const ConceptRef& demand_proj, const ConceptRef& offer_proj,
                const Reasoner& reasoner);
// What the offer projection brings beyond what demand and offer share.
ConceptRef miss(const ConceptRef& demand_proj, const ConceptRef& offer_proj,
                const Reasoner& reasoner);

// One-shot Ontology overloads (throwaway Reasoner per call).
ConceptRef reduce(const ConceptRef& expr, const Ontology& ontology);
ConceptRef lcs(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology);
ConceptRef semantic_difference(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology);
ConceptRef rest(const ConceptRef& demand_proj, const ConceptRef& offer_proj,
                const Ontology& ontology);
ConceptRef miss(const ConceptRef& demand_proj, const ConceptRef& offer_proj,
                const Ontology& ontology);

}  // namespace elmatch
