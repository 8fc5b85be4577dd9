#include "elmatch/normalize.hpp"

#include <cassert>
#include <utility>

#include "elmatch/diagnostics.hpp"

namespace elmatch {

int NormalizedAxiomSet::concept_id(const std::string& label) const {
  auto it = concept_ids_.find(label);
  return it == concept_ids_.end() ? -1 : it->second;
}

int NormalizedAxiomSet::role_id(const std::string& label) const {
  auto it = role_ids_.find(label);
  return it == role_ids_.end() ? -1 : it->second;
}

const std::vector<int>* NormalizedAxiomSet::exists_lhs(int role, int filler) const {
  const auto& by_filler = exists_lhs_[role];
  auto it = by_filler.find(filler);
  return it == by_filler.end() ? nullptr : &it->second;
}

std::vector<std::pair<int, int>> NormalizedAxiomSet::all_subs() const { return flat_subs_; }

std::vector<std::tuple<int, int, int>> NormalizedAxiomSet::all_conj() const { return flat_conj_; }

std::vector<std::tuple<int, int, int>> NormalizedAxiomSet::all_exists_rhs() const {
  return flat_exists_rhs_;
}

std::vector<std::tuple<int, int, int>> NormalizedAxiomSet::all_exists_lhs() const {
  return flat_exists_lhs_;
}

Normalizer::Normalizer(const Ontology& ontology) {
  intern_concept("Top", false, false);
  intern_concept("Bottom", false, false);
  for (const auto& name : ontology.concept_names()) intern_concept(name, false, true);
  for (const auto& name : ontology.role_names()) intern_role(name);
  for (const auto& axiom : ontology.axioms()) {
    if (const auto* gci = std::get_if<Gci>(&axiom)) {
      push(gci->lhs, gci->rhs);
    } else if (const auto* ri = std::get_if<RoleInclusion>(&axiom)) {
      add_role_axiom(*ri);
    }
    // Assertions are not part of classification.
  }
  process_queue();
}

Normalizer::Normalizer(NormalizedAxiomSet base) : set_(std::move(base)) {}

int Normalizer::add_query_name(const std::string& label, const ConceptRef& expr) {
  assert(!label.empty() && label.front() == '#');
  assert(set_.concept_id(label) == -1);
  int id = intern_concept(label, false, false);
  ConceptRef name_expr = ConceptExpr::atom(label);
  push(name_expr, expr);
  push(expr, name_expr);
  process_queue();
  return id;
}

NormalizedAxiomSet Normalizer::take() {
  assert(queue_.empty());
  return std::move(set_);
}

int Normalizer::intern_concept(const std::string& label, bool nominal, bool user) {
  auto it = set_.concept_ids_.find(label);
  if (it != set_.concept_ids_.end()) return it->second;
  int id = static_cast<int>(set_.concept_labels_.size());
  set_.concept_ids_.emplace(label, id);
  set_.concept_labels_.push_back(label);
  set_.nominal_flags_.push_back(nominal);
  set_.user_concept_flags_.push_back(user);
  if (nominal) set_.nominal_ids_.push_back(id);
  set_.subs_.emplace_back();
  set_.conj_.emplace_back();
  set_.exists_rhs_.emplace_back();
  set_.exists_lhs_by_filler_.emplace_back();
  return id;
}

int Normalizer::intern_role(const std::string& label) {
  auto it = set_.role_ids_.find(label);
  if (it != set_.role_ids_.end()) return it->second;
  int id = static_cast<int>(set_.role_labels_.size());
  set_.role_ids_.emplace(label, id);
  set_.role_labels_.push_back(label);
  set_.exists_lhs_.emplace_back();
  set_.role_subs_.emplace_back();
  set_.chain_by_first_.emplace_back();
  set_.chain_by_second_.emplace_back();
  return id;
}

bool Normalizer::is_basic(const ConceptRef& expr) const {
  switch (expr->kind()) {
    case ConceptKind::Top:
    case ConceptKind::Atom:
    case ConceptKind::Nominal:
      return true;
    default:
      return false;
  }
}

int Normalizer::basic_id(const ConceptRef& expr) {
  switch (expr->kind()) {
    case ConceptKind::Top:
      return NormalizedAxiomSet::kTop;
    case ConceptKind::Bottom:
      return NormalizedAxiomSet::kBottom;
    case ConceptKind::Atom:
      return intern_concept(expr->name(), false, false);
    case ConceptKind::Nominal:
      return intern_concept(render(expr), true, false);
    default:
      assert(false && "basic_id on a complex expression");
      return -1;
  }
}

int Normalizer::fresh_concept(const std::string& key) {
  auto it = set_.fresh_names_.find(key);
  if (it != set_.fresh_names_.end()) return it->second;
  std::string label = "#n" + std::to_string(set_.fresh_counter_++);
  int id = intern_concept(label, false, false);
  set_.fresh_names_.emplace(key, id);
  return id;
}

std::string Normalizer::fresh_role() {
  std::string label = "#r" + std::to_string(set_.fresh_role_counter_++);
  intern_role(label);
  return label;
}

void Normalizer::push(ConceptRef lhs, ConceptRef rhs) {
  queue_.emplace_back(canonicalize(lhs), canonicalize(rhs));
}

int Normalizer::name_for(const ConceptRef& expr) { return fresh_concept(render(expr)); }

void Normalizer::ensure_lhs_def(const ConceptRef& expr, int name_id) {
  if (!set_.lhs_def_emitted_.insert(name_id).second) return;
  push(expr, ConceptExpr::atom(set_.concept_labels_[name_id]));
}

void Normalizer::ensure_rhs_def(const ConceptRef& expr, int name_id) {
  if (!set_.rhs_def_emitted_.insert(name_id).second) return;
  push(ConceptExpr::atom(set_.concept_labels_[name_id]), expr);
}

void Normalizer::emit_subs(int a, int b) {
  if (a == b) return;
  std::string key = "s|" + std::to_string(a) + "|" + std::to_string(b);
  if (!set_.dedup_.insert(key).second) return;
  set_.subs_[a].push_back(b);
  set_.flat_subs_.emplace_back(a, b);
  ++set_.normal_axiom_count_;
}

void Normalizer::emit_conj(int a1, int a2, int b) {
  if (a1 > a2) std::swap(a1, a2);
  std::string key = "c|" + std::to_string(a1) + "|" + std::to_string(a2) + "|" + std::to_string(b);
  if (!set_.dedup_.insert(key).second) return;
  set_.conj_[a1].emplace_back(a2, b);
  if (a1 != a2) set_.conj_[a2].emplace_back(a1, b);
  set_.flat_conj_.emplace_back(a1, a2, b);
  ++set_.normal_axiom_count_;
}

void Normalizer::emit_exists_rhs(int a, int r, int b) {
  std::string key = "e|" + std::to_string(a) + "|" + std::to_string(r) + "|" + std::to_string(b);
  if (!set_.dedup_.insert(key).second) return;
  set_.exists_rhs_[a].emplace_back(r, b);
  set_.flat_exists_rhs_.emplace_back(a, r, b);
  ++set_.normal_axiom_count_;
}

void Normalizer::emit_exists_lhs(int r, int a, int b) {
  std::string key = "l|" + std::to_string(r) + "|" + std::to_string(a) + "|" + std::to_string(b);
  if (!set_.dedup_.insert(key).second) return;
  set_.exists_lhs_[r][a].push_back(b);
  set_.exists_lhs_by_filler_[a].emplace_back(r, b);
  set_.flat_exists_lhs_.emplace_back(r, a, b);
  ++set_.normal_axiom_count_;
}

void Normalizer::add_role_axiom(const RoleInclusion& ri) {
  std::vector<std::string> chain = ri.chain.roles;
  assert(!chain.empty());
  // Chains longer than two are folded left-to-right with fresh roles.
  while (chain.size() > 2) {
    std::string folded = fresh_role();
    int r1 = intern_role(chain[0]);
    int r2 = intern_role(chain[1]);
    int u = intern_role(folded);
    set_.chain_by_first_[r1].emplace_back(r2, u);
    set_.chain_by_second_[r2].emplace_back(r1, u);
    ++set_.normal_axiom_count_;
    chain.erase(chain.begin(), chain.begin() + 2);
    chain.insert(chain.begin(), folded);
  }
  int s = intern_role(ri.super);
  if (chain.size() == 1) {
    int r = intern_role(chain[0]);
    set_.role_subs_[r].push_back(s);
    ++set_.normal_axiom_count_;
  } else {
    int r1 = intern_role(chain[0]);
    int r2 = intern_role(chain[1]);
    set_.chain_by_first_[r1].emplace_back(r2, s);
    set_.chain_by_second_[r2].emplace_back(r1, s);
    ++set_.normal_axiom_count_;
  }
}

void Normalizer::process_queue() {
  // FIFO keeps fresh-name assignment deterministic for a given input order.
  for (std::size_t at = 0; at < queue_.size(); ++at) {
    ConceptRef lhs = queue_[at].first;
    ConceptRef rhs = queue_[at].second;
    normalize_gci(lhs, rhs);
  }
  queue_.clear();
}

void Normalizer::normalize_gci(const ConceptRef& lhs, const ConceptRef& rhs) {
  // Trivial and absorbing cases first.
  if (rhs->is_top()) return;
  if (lhs->is_bottom()) return;
  if (lhs->kind() == ConceptKind::Some && lhs->filler()->is_bottom()) return;
  ConceptRef right = rhs;
  if (right->kind() == ConceptKind::Some && right->filler()->is_bottom()) {
    right = ConceptExpr::bottom();
  }

  if (right->kind() == ConceptKind::And) {
    for (const auto& m : right->members()) push(lhs, m);
    return;
  }

  bool rhs_atomic = is_basic(right) || right->is_bottom();

  if (is_basic(lhs)) {
    if (rhs_atomic) {
      emit_subs(basic_id(lhs), basic_id(right));
      return;
    }
    // right is an existential.
    const ConceptRef& filler = right->filler();
    int role = intern_role(right->role());
    if (is_basic(filler)) {
      emit_exists_rhs(basic_id(lhs), role, basic_id(filler));
    } else {
      int n = name_for(filler);
      ensure_rhs_def(filler, n);
      emit_exists_rhs(basic_id(lhs), role, n);
    }
    return;
  }

  if (!rhs_atomic) {
    // Complex on both sides: route through a fresh middle name.
    int n = name_for(right);
    ensure_rhs_def(right, n);
    push(lhs, ConceptExpr::atom(set_.concept_labels_[n]));
    return;
  }

  int b = basic_id(right);

  if (lhs->kind() == ConceptKind::Some) {
    const ConceptRef& filler = lhs->filler();
    int role = intern_role(lhs->role());
    if (is_basic(filler)) {
      emit_exists_lhs(role, basic_id(filler), b);
    } else {
      int m = name_for(filler);
      ensure_lhs_def(filler, m);
      emit_exists_lhs(role, m, b);
    }
    return;
  }

  assert(lhs->kind() == ConceptKind::And);
  std::vector<ConceptRef> members;
  members.reserve(lhs->members().size());
  bool replaced = false;
  for (const auto& m : lhs->members()) {
    if (is_basic(m)) {
      members.push_back(m);
    } else {
      int id = name_for(m);
      ensure_lhs_def(m, id);
      members.push_back(ConceptExpr::atom(set_.concept_labels_[id]));
      replaced = true;
    }
  }
  if (members.size() == 2 && !replaced) {
    emit_conj(basic_id(members[0]), basic_id(members[1]), b);
    return;
  }
  if (replaced) {
    push(ConceptExpr::conj(std::move(members)), right);
    return;
  }
  // More than two basic members: fold the first two through a fresh name.
  ConceptRef first_two = ConceptExpr::conj({members[0], members[1]});
  int n = name_for(first_two);
  ensure_lhs_def(first_two, n);
  std::vector<ConceptRef> rest;
  rest.push_back(ConceptExpr::atom(set_.concept_labels_[n]));
  for (std::size_t i = 2; i < members.size(); ++i) rest.push_back(members[i]);
  push(ConceptExpr::conj(std::move(rest)), right);
}

NormalizedAxiomSet normalize(const Ontology& ontology) { return Normalizer(ontology).take(); }

}  // namespace elmatch
