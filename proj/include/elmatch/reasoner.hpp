#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "elmatch/classify.hpp"
#include "elmatch/concept.hpp"
#include "elmatch/normalize.hpp"
#include "elmatch/ontology.hpp"

namespace elmatch {

// Entailment façade over one ontology snapshot. Construction normalizes and
// saturates the ontology once; each compound query then re-saturates a copy
// of the base axiom set extended with fresh definitional names for the query
// concepts, so the shared state never mutates. Name-to-name queries answer
// straight from the base index. Results are memoized by rendered text.
class Reasoner {
 public:
  explicit Reasoner(Ontology ontology);

  const Ontology& ontology() const { return ontology_; }
  const NormalizedAxiomSet& normalized() const { return base_; }
  const ClassificationIndex& index() const { return base_index_; }

  // Entails c \sqsubseteq d? Throws Error{UnknownSymbol} when either side
  // references a concept, role, or individual the ontology does not declare.
  bool subsumes(const ConceptRef& c, const ConceptRef& d) const;
  bool equivalent(const ConceptRef& c, const ConceptRef& d) const;
  // c \sqsubseteq d and not d \sqsubseteq c.
  bool strictly_subsumed(const ConceptRef& c, const ConceptRef& d) const;
  bool satisfiable(const ConceptRef& c) const;
  bool consistent() const { return !base_index_.inconsistent(); }

  // Subsumption-minimal user concept names above every listed name; Top is
  // never included, so an empty result means Top is the only common
  // subsumer. Output sorted by name.
  std::vector<std::string> min_common_named_subsumers(const std::vector<std::string>& names) const;
  // Same reduction applied to the named subsumers shared by two arbitrary
  // descriptions (one query saturation for the pair).
  std::vector<std::string> common_named_subsumers(const ConceptRef& c, const ConceptRef& d) const;
  // User concept names entailed above the named concept, sorted.
  std::vector<std::string> named_subsumers(const std::string& concept_name) const;

 private:
  void validate_symbols(const ConceptRef& expr) const;
  bool subsumes_uncached(const ConceptRef& c, const ConceptRef& d) const;
  std::vector<std::string> minimal_named(const ClassificationIndex& index,
                                         std::vector<int>& common) const;

  Ontology ontology_;
  NormalizedAxiomSet base_;
  ClassificationIndex base_index_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, bool> subsumption_cache_;
};

// Convenience wrappers matching the operation signatures used in small,
// one-shot situations. Each builds a throwaway Reasoner; loops should hold
// one Reasoner instead.
bool subsumes(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology);
bool equivalent(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology);
bool strictly_subsumed(const ConceptRef& c, const ConceptRef& d, const Ontology& ontology);

// Transitively reduced named hierarchy as (sub, super) rendered pairs:
// the minimal set of subsumption statements whose closure reproduces every
// entailed subsumption between user concept names. Equivalent names appear
// as mutual pairs chained in name order; unsatisfiable names collapse to
// (name, "Bottom"); names entailed from Top appear as ("Top", name).
std::vector<std::pair<std::string, std::string>> hierarchy_axioms(const Reasoner& reasoner);

}  // namespace elmatch
