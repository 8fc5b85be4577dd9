#pragma once

#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "elmatch/concept.hpp"
#include "elmatch/ontology.hpp"

namespace elmatch {

// Axioms rewritten into the shapes the saturation engine consumes:
//
//   A \sqsubseteq B            (subs)
//   A1 \sqcap A2 \sqsubseteq B (conj)
//   A \sqsubseteq some r.B     (exists_rhs)
//   some r.A \sqsubseteq B     (exists_lhs)
//   r \sqsubseteq s            (role_subs)
//   r1 o r2 \sqsubseteq s      (chains)
//
// where A, A1, A2 are concept names, nominals, or Top and B additionally may
// be Bottom. Complex subexpressions are replaced by fresh definitional names;
// the rewriting is a conservative extension, so subsumptions between input
// symbols are untouched. Fresh names carry a '#' so they can never collide
// with parsed identifiers.
//
// Concept ids: 0 = Top, 1 = Bottom, then every other basic concept in
// first-interning order. Role ids likewise.
class NormalizedAxiomSet {
 public:
  static constexpr int kTop = 0;
  static constexpr int kBottom = 1;

  int concept_count() const { return static_cast<int>(concept_labels_.size()); }
  int role_count() const { return static_cast<int>(role_labels_.size()); }

  const std::string& concept_label(int id) const { return concept_labels_[id]; }
  const std::string& role_label(int id) const { return role_labels_[id]; }
  // -1 when absent.
  int concept_id(const std::string& label) const;
  int role_id(const std::string& label) const;

  bool is_nominal(int id) const { return nominal_flags_[id]; }
  bool is_user_concept(int id) const { return user_concept_flags_[id]; }
  const std::vector<int>& nominal_ids() const { return nominal_ids_; }

  // Normal-form axiom views, indexed for rule application.
  const std::vector<int>& subs(int a) const { return subs_[a]; }
  const std::vector<std::pair<int, int>>& conj(int a) const { return conj_[a]; }
  const std::vector<std::pair<int, int>>& exists_rhs(int a) const { return exists_rhs_[a]; }
  const std::vector<int>* exists_lhs(int role, int filler) const;
  const std::vector<std::pair<int, int>>& exists_lhs_by_filler(int a) const {
    return exists_lhs_by_filler_[a];
  }
  const std::vector<int>& role_subs(int r) const { return role_subs_[r]; }
  const std::vector<std::pair<int, int>>& chain_by_first(int r) const { return chain_by_first_[r]; }
  const std::vector<std::pair<int, int>>& chain_by_second(int r) const {
    return chain_by_second_[r];
  }

  // Rendered complex subexpression -> fresh definitional concept name id.
  const std::unordered_map<std::string, int>& fresh_name_map() const { return fresh_names_; }

  std::size_t normal_axiom_count() const { return normal_axiom_count_; }

  // Flat snapshots used by tests and by the naive reference saturator.
  std::vector<std::pair<int, int>> all_subs() const;
  std::vector<std::tuple<int, int, int>> all_conj() const;
  std::vector<std::tuple<int, int, int>> all_exists_rhs() const;
  std::vector<std::tuple<int, int, int>> all_exists_lhs() const;

 private:
  friend class Normalizer;

  std::vector<std::string> concept_labels_;
  std::unordered_map<std::string, int> concept_ids_;
  std::vector<bool> nominal_flags_;
  std::vector<bool> user_concept_flags_;
  std::vector<int> nominal_ids_;

  std::vector<std::string> role_labels_;
  std::unordered_map<std::string, int> role_ids_;

  std::vector<std::vector<int>> subs_;
  std::vector<std::vector<std::pair<int, int>>> conj_;
  std::vector<std::vector<std::pair<int, int>>> exists_rhs_;
  std::vector<std::unordered_map<int, std::vector<int>>> exists_lhs_;
  std::vector<std::vector<std::pair<int, int>>> exists_lhs_by_filler_;
  std::vector<std::vector<int>> role_subs_;
  std::vector<std::vector<std::pair<int, int>>> chain_by_first_;
  std::vector<std::vector<std::pair<int, int>>> chain_by_second_;

  std::unordered_map<std::string, int> fresh_names_;
  std::unordered_set<int> lhs_def_emitted_;
  std::unordered_set<int> rhs_def_emitted_;
  std::unordered_set<std::string> dedup_;
  std::vector<std::pair<int, int>> flat_subs_;
  std::vector<std::tuple<int, int, int>> flat_conj_;
  std::vector<std::tuple<int, int, int>> flat_exists_rhs_;
  std::vector<std::tuple<int, int, int>> flat_exists_lhs_;
  std::size_t normal_axiom_count_ = 0;
  int fresh_counter_ = 0;
  int fresh_role_counter_ = 0;
};

// Incremental normalizer. The usual flow is:
//
//   Normalizer n(ontology);            // interns symbols, normalizes axioms
//   n.add_definition("#q0", expr);     // optional query names, both directions
//   NormalizedAxiomSet set = n.take();
//
// Query extension works on a copy: Normalizer(base_set) resumes with the
// fresh-name state of an already built set.
class Normalizer {
 public:
  explicit Normalizer(const Ontology& ontology);
  explicit Normalizer(NormalizedAxiomSet base);

  // Interns a new query concept name (must not collide; '#' prefix keeps it
  // out of the parseable identifier space) and adds name == expr.
  int add_query_name(const std::string& label, const ConceptRef& expr);

  NormalizedAxiomSet take();

 private:
  int intern_concept(const std::string& label, bool nominal, bool user);
  int intern_role(const std::string& label);
  int basic_id(const ConceptRef& expr);
  bool is_basic(const ConceptRef& expr) const;
  int fresh_concept(const std::string& key);
  std::string fresh_role();
  void push(ConceptRef lhs, ConceptRef rhs);
  void ensure_lhs_def(const ConceptRef& expr, int name_id);
  void ensure_rhs_def(const ConceptRef& expr, int name_id);
  int name_for(const ConceptRef& expr);
  void process_queue();
  void normalize_gci(const ConceptRef& lhs, const ConceptRef& rhs);
  void add_role_axiom(const RoleInclusion& ri);
  void emit_subs(int a, int b);
  void emit_conj(int a1, int a2, int b);
  void emit_exists_rhs(int a, int r, int b);
  void emit_exists_lhs(int r, int a, int b);

  NormalizedAxiomSet set_;
  std::vector<std::pair<ConceptRef, ConceptRef>> queue_;
};

// One-shot convenience: normalize an ontology's axioms (ABox assertions are
// skipped; the parser warns about them).
NormalizedAxiomSet normalize(const Ontology& ontology);

}  // namespace elmatch
